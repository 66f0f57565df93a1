// Exact coefficient arithmetic over Z, Q and GF(p).
//
// Every value carries its ring, and mixing rings is a hard error: the
// algebra layers above never coerce silently.  Rationals are kept in
// lowest terms with positive denominator (GMP canonical form), prime
// field elements as residues in [0, p).

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cent {

/// Error type for contract violations (dimension/ring mismatches,
/// invalid input).  Verification *failures* are never exceptions; they
/// are report content.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

enum class RingKind { Integers, Rationals, PrimeField };

struct RingSpec {
    RingKind kind = RingKind::Rationals;
    unsigned long p = 0;  // modulus, PrimeField only

    static RingSpec integers() { return {RingKind::Integers, 0}; }
    static RingSpec rationals() { return {RingKind::Rationals, 0}; }
    static RingSpec gf(unsigned long p);  // throws unless p is prime

    bool is_field() const { return kind != RingKind::Integers; }
    bool operator==(const RingSpec&) const = default;

    std::string name() const;
};

class Scalar {
public:
    Scalar() : ring_(RingSpec::rationals()), v_(0) {}
    Scalar(RingSpec ring, mpq_class v) : ring_(ring), v_(std::move(v)) { normalize(); }

    static Scalar zero(RingSpec ring) { return Scalar(ring, 0); }
    static Scalar one(RingSpec ring) { return Scalar(ring, 1); }
    static Scalar of_int(RingSpec ring, long v) { return Scalar(ring, mpq_class(v)); }
    /// Parses "p/q" or "k" (any sign); GF(p) input is reduced mod p and
    /// rejects denominators divisible by p.
    static Scalar parse(RingSpec ring, const std::string& text);

    const RingSpec& ring() const { return ring_; }
    const mpq_class& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;  // fields; over Z only for units
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
    bool operator==(const Scalar& o) const { return ring_ == o.ring_ && v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Exact change of coefficients: Z -> Q lift, Z/Q -> GF(p)
    /// reduction (denominator must be invertible mod p), GF(p) -> same p.
    Scalar to_ring(RingSpec target) const;

    std::string str() const;

private:
    void normalize();
    void require_same(const Scalar& o) const;

    RingSpec ring_;
    mpq_class v_;
};

bool is_prime(unsigned long p);

}  // namespace cent
