// Instance descriptions for the command-line front end.  JSON in, JSON
// out; rationals travel as strings "p/q" (or JSON integers), never as
// floats.

#pragma once

#include "cent/frobenius.hpp"
#include "cent/jordan.hpp"

#include <json.hpp>

#include <optional>

namespace cent {

struct InstanceSpec {
    RingSpec ring;
    std::optional<JordanType> jordan_type;
    std::optional<Matrix> matrix;
    std::optional<GroupSpec> group;
    nlohmann::ordered_json echo;  // normalized instance description
};

/// Parses and validates an instance: a ring plus exactly one of
/// jordan_type, matrix or group.  Throws Error on schema violations.
InstanceSpec parse_instance(const nlohmann::json& j);

/// Cycle notation "(1 2 3)(4 5)": 1-based, whitespace-separated,
/// fixed points omitted.  Returns images, 0-based, of [0, n).
std::vector<int> parse_cycles(const std::string& text, int n);

/// Degree needed by a cycle string (its largest point).
int cycles_max_point(const std::string& text);

Scalar scalar_from_json(const RingSpec& ring, const nlohmann::json& v);
Matrix matrix_from_json(const RingSpec& ring, const nlohmann::json& rows);
nlohmann::ordered_json matrix_to_json(const Matrix& m);

}  // namespace cent
