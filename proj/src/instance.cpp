#include "cent/instance.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cent {

using nlohmann::json;
using nlohmann::ordered_json;

Scalar scalar_from_json(const RingSpec& ring, const json& v) {
    if (v.is_string()) return Scalar::parse(ring, v.get<std::string>());
    if (v.is_number_integer()) return Scalar::of_int(ring, v.get<long>());
    throw Error("scalars must be strings like \"p/q\" or integers, got " + v.dump());
}

Matrix matrix_from_json(const RingSpec& ring, const json& rows) {
    if (!rows.is_array() || rows.empty()) throw Error("matrix must be a non-empty array of rows");
    int r = static_cast<int>(rows.size());
    int c = -1;
    for (const auto& row : rows) {
        if (!row.is_array()) throw Error("matrix rows must be arrays");
        if (c < 0) c = static_cast<int>(row.size());
        if (static_cast<int>(row.size()) != c) throw Error("ragged matrix rows");
    }
    Matrix m(ring, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = scalar_from_json(ring, rows[i][j]);
    return m;
}

ordered_json matrix_to_json(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

int cycles_max_point(const std::string& text) {
    int maxp = 0;
    for (size_t k = 0; k < text.size();) {
        if (std::isdigit(static_cast<unsigned char>(text[k]))) {
            int v = 0;
            while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k])))
                v = v * 10 + (text[k++] - '0');
            maxp = std::max(maxp, v);
        } else {
            ++k;
        }
    }
    return maxp;
}

std::vector<int> parse_cycles(const std::string& text, int n) {
    std::vector<int> images(n);
    std::vector<bool> used(n, false);
    for (int i = 0; i < n; ++i) images[i] = i;
    size_t k = 0;
    auto skip_ws = [&] { while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k; };
    skip_ws();
    while (k < text.size()) {
        if (text[k] != '(') throw Error("cycle notation: expected '(' in \"" + text + "\"");
        ++k;
        std::vector<int> cycle;
        while (true) {
            skip_ws();
            if (k < text.size() && text[k] == ')') { ++k; break; }
            if (k >= text.size() || !std::isdigit(static_cast<unsigned char>(text[k])))
                throw Error("cycle notation: expected a point in \"" + text + "\"");
            int v = 0;
            while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k])))
                v = v * 10 + (text[k++] - '0');
            if (v < 1 || v > n) throw Error("cycle point out of range: " + std::to_string(v));
            cycle.push_back(v - 1);
        }
        for (size_t t = 0; t < cycle.size(); ++t) {
            int from = cycle[t], to = cycle[(t + 1) % cycle.size()];
            if (used[from]) throw Error("point repeated across cycles: " + std::to_string(from + 1));
            used[from] = true;
            images[from] = to;
        }
        skip_ws();
    }
    return images;
}

namespace {

RingSpec ring_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw Error("ring must be {\"kind\": ...}");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "Z") return RingSpec::integers();
    if (kind == "Q") return RingSpec::rationals();
    if (kind == "GF") {
        if (!j.contains("p") || !j.at("p").is_number_integer())
            throw Error("ring GF needs an integer modulus \"p\"");
        long p = j.at("p").get<long>();
        if (p < 2) throw Error("modulus must be at least 2");
        return RingSpec::gf(static_cast<unsigned long>(p));
    }
    throw Error("unknown ring kind \"" + kind + "\" (expected Z, Q or GF)");
}

ordered_json ring_echo(const RingSpec& ring) {
    ordered_json r;
    switch (ring.kind) {
        case RingKind::Integers: r["kind"] = "Z"; break;
        case RingKind::Rationals: r["kind"] = "Q"; break;
        case RingKind::PrimeField:
            r["kind"] = "GF";
            r["p"] = ring.p;
            break;
    }
    return r;
}

}  // namespace

InstanceSpec parse_instance(const json& j) {
    if (!j.is_object()) throw Error("instance must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "ring" && key != "jordan_type" && key != "matrix" && key != "group")
            throw Error("unknown instance key \"" + key + "\"");
    }
    if (!j.contains("ring")) throw Error("instance needs a \"ring\"");
    InstanceSpec spec;
    spec.ring = ring_from_json(j.at("ring"));

    int provided = j.contains("jordan_type") + j.contains("matrix") + j.contains("group");
    if (provided != 1)
        throw Error("instance needs exactly one of \"jordan_type\", \"matrix\" or \"group\"");

    spec.echo["ring"] = ring_echo(spec.ring);

    if (j.contains("jordan_type")) {
        const json& groups = j.at("jordan_type");
        if (!groups.is_array() || groups.empty()) throw Error("jordan_type must be a non-empty array");
        std::vector<EigenGroup> egs;
        for (const auto& g : groups) {
            if (!g.contains("eigenvalue") || !g.contains("blocks"))
                throw Error("each group needs \"eigenvalue\" and \"blocks\"");
            EigenGroup eg{scalar_from_json(spec.ring, g.at("eigenvalue")), {}};
            for (const auto& b : g.at("blocks")) {
                if (!b.contains("size") || !b.contains("mult"))
                    throw Error("each block needs \"size\" and \"mult\"");
                eg.blocks.push_back({b.at("size").get<int>(), b.at("mult").get<int>()});
            }
            egs.push_back(std::move(eg));
        }
        spec.jordan_type = JordanType(spec.ring, std::move(egs));
        ordered_json echo = ordered_json::array();
        for (const auto& g : spec.jordan_type->groups()) {
            ordered_json ge;
            ge["eigenvalue"] = g.eigenvalue.str();
            ordered_json blocks = ordered_json::array();
            for (const auto& b : g.blocks) blocks.push_back({{"size", b.size}, {"mult", b.mult}});
            ge["blocks"] = std::move(blocks);
            echo.push_back(std::move(ge));
        }
        spec.echo["jordan_type"] = std::move(echo);
    } else if (j.contains("matrix")) {
        spec.matrix = matrix_from_json(spec.ring, j.at("matrix"));
        if (spec.matrix->rows() != spec.matrix->cols()) throw Error("instance matrix must be square");
        spec.echo["matrix"] = matrix_to_json(*spec.matrix);
    } else {
        const json& g = j.at("group");
        if (g.contains("permutations")) {
            const json& perms = g.at("permutations");
            if (!perms.is_array() || perms.empty()) throw Error("\"permutations\" must be a non-empty array");
            int n = 0;
            if (g.contains("n")) n = g.at("n").get<int>();
            std::vector<std::string> texts;
            for (const auto& p : perms) {
                texts.push_back(p.get<std::string>());
                n = std::max(n, cycles_max_point(texts.back()));
            }
            if (n < 1) throw Error("permutation group needs a positive degree");
            std::vector<std::vector<int>> gens;
            for (const auto& t : texts) gens.push_back(parse_cycles(t, n));
            spec.group = GroupSpec::from_permutations(spec.ring, n, gens);
            spec.echo["group"] = ordered_json{{"permutations", texts}, {"n", n}};
        } else if (g.contains("matrices")) {
            std::vector<Matrix> mats;
            for (const auto& m : g.at("matrices")) mats.push_back(matrix_from_json(spec.ring, m));
            spec.group = GroupSpec::from_matrices(std::move(mats));
            ordered_json echo = ordered_json::array();
            for (const auto& m : spec.group->elements()) echo.push_back(matrix_to_json(m));
            spec.echo["group"] = ordered_json{{"matrices", std::move(echo)}};
        } else {
            throw Error("group needs \"permutations\" or \"matrices\"");
        }
    }
    return spec;
}

}  // namespace cent
