#include "cent/ring.hpp"

namespace cent {

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    mpz_class z(p);
    return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

RingSpec RingSpec::gf(unsigned long p) {
    if (!is_prime(p)) throw Error("GF(" + std::to_string(p) + "): modulus is not prime");
    return {RingKind::PrimeField, p};
}

std::string RingSpec::name() const {
    switch (kind) {
        case RingKind::Integers: return "Z";
        case RingKind::Rationals: return "Q";
        case RingKind::PrimeField: return "GF(" + std::to_string(p) + ")";
    }
    return "?";
}

void Scalar::normalize() {
    v_.canonicalize();
    switch (ring_.kind) {
        case RingKind::Rationals:
            break;
        case RingKind::Integers:
            if (v_.get_den() != 1) throw Error("non-integral value in ring Z: " + v_.get_str());
            break;
        case RingKind::PrimeField: {
            mpz_class p(ring_.p);
            mpz_class num = v_.get_num() % p;
            if (num < 0) num += p;
            if (v_.get_den() != 1) {
                mpz_class inv;
                if (mpz_invert(inv.get_mpz_t(), v_.get_den().get_mpz_t(), p.get_mpz_t()) == 0)
                    throw Error("denominator not invertible mod " + std::to_string(ring_.p));
                num = (num * inv) % p;
                if (num < 0) num += p;
            }
            v_ = mpq_class(num);
            break;
        }
    }
}

void Scalar::require_same(const Scalar& o) const {
    if (!(ring_ == o.ring_))
        throw Error("ring mismatch: " + ring_.name() + " vs " + o.ring_.name());
}

Scalar Scalar::parse(RingSpec ring, const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0) throw Error("cannot parse scalar '" + text + "'");
    return Scalar(ring, v);
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same(o);
    return Scalar(ring_, v_ + o.v_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same(o);
    return Scalar(ring_, v_ - o.v_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same(o);
    return Scalar(ring_, v_ * o.v_);
}

Scalar Scalar::operator-() const { return Scalar(ring_, -v_); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("division by zero in " + ring_.name());
    switch (ring_.kind) {
        case RingKind::Rationals:
            return Scalar(ring_, 1 / v_);
        case RingKind::Integers:
            if (v_ == 1 || v_ == -1) return *this;
            throw Error("non-unit " + v_.get_str() + " has no inverse in Z");
        case RingKind::PrimeField: {
            mpz_class p(ring_.p), inv;
            if (mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t()) == 0)
                throw Error("no inverse mod " + std::to_string(ring_.p));
            return Scalar(ring_, mpq_class(inv));
        }
    }
    throw Error("unreachable");
}

Scalar Scalar::to_ring(RingSpec target) const {
    if (ring_ == target) return *this;
    if (ring_.kind == RingKind::PrimeField || (target.kind == RingKind::Integers && v_.get_den() != 1))
        throw Error("cannot map " + ring_.name() + " value " + str() + " into " + target.name());
    return Scalar(target, v_);
}

std::string Scalar::str() const { return v_.get_str(); }

}  // namespace cent
