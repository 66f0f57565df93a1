#include "cent/commands.hpp"

#include "cent/cellular.hpp"
#include "cent/oracle.hpp"

#include <numeric>
#include <random>

namespace cent {

using nlohmann::ordered_json;

const char* const kToolVersion = "0.1.0";

namespace {

ordered_json report_head(const char* command, const InstanceSpec& spec) {
    ordered_json rep;
    rep["tool"] = ordered_json{{"name", "cent"}, {"version", kToolVersion}};
    rep["command"] = command;
    rep["instance"] = spec.echo;
    return rep;
}

CommandResult finish(ordered_json rep, bool pass) {
    rep["status"] = pass ? "pass" : "fail";
    return {std::move(rep), pass ? 0 : 1};
}

/// The block type of the instance: as given, or recovered from the
/// matrix.  Group instances have none.
JordanType instance_type(const InstanceSpec& spec) {
    if (spec.jordan_type) return *spec.jordan_type;
    if (spec.matrix) return jordan_type_of_rational(*spec.matrix);
    throw Error("this analysis needs a jordan_type or matrix instance");
}

ordered_json type_echo(const JordanType& jt) {
    ordered_json groups = ordered_json::array();
    for (const auto& g : jt.groups()) {
        ordered_json ge;
        ge["eigenvalue"] = g.eigenvalue.str();
        ordered_json blocks = ordered_json::array();
        for (const auto& b : g.blocks) blocks.push_back({{"size", b.size}, {"mult", b.mult}});
        ge["blocks"] = std::move(blocks);
        groups.push_back(std::move(ge));
    }
    return groups;
}

SpanBasis structured_span(const JordanType& jt, const BlockIndex& idx, RingSpec field) {
    std::vector<Matrix> mats;
    for (const auto& e : structured_basis(jt)) mats.push_back(materialize(jt, idx, e).to_ring(field));
    return make_span(field, idx.n(), mats);
}

AlgebraElement random_element(const JordanType& jt, const std::vector<BasisElement>& basis,
                              std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    AlgebraElement a(jt.ring());
    for (const auto& e : basis) a.add(e, Scalar::of_int(jt.ring(), coeff(rng)));
    return a;
}

bool field_ring(const RingSpec& r) { return r.is_field(); }

bool oracle_applicable(const InstanceSpec& spec, const Options& opts, int n, std::string& why) {
    if (opts.no_oracle) { why = "skipped (--no-oracle)"; return false; }
    if (!field_ring(spec.ring)) { why = "skipped (oracle needs a field ring)"; return false; }
    if (n > opts.oracle_cap) { why = "skipped (n exceeds oracle cap)"; return false; }
    return true;
}

bool trace_form_ok(const RingSpec& ring, int n) {
    return ring.kind == RingKind::Rationals ||
           (ring.kind == RingKind::PrimeField && ring.p > static_cast<unsigned long>(n));
}

}  // namespace

CommandResult cmd_basis(const InstanceSpec& spec, const Options& opts) {
    JordanType jt = instance_type(spec);
    BlockIndex idx(jt);
    ordered_json rep = report_head("basis", spec);
    bool pass = true;

    rep["results"]["block_type"] = type_echo(jt);
    rep["results"]["n"] = idx.n();
    auto basis = structured_basis(jt);
    long formula = rank_formula(jt);
    rep["results"]["rank_formula"] = formula;
    rep["results"]["basis_size"] = basis.size();
    bool rank_ok = formula == static_cast<long>(basis.size());
    rep["results"]["rank_matches_basis"] = rank_ok;
    pass = pass && rank_ok;

    ordered_json names = ordered_json::array();
    for (const auto& e : basis) names.push_back(e.str());
    rep["results"]["basis"] = std::move(names);

    // Seeded spot check: bilinear products against materialized ones.
    std::mt19937_64 rng(opts.seed);
    bool products_ok = true;
    for (int trial = 0; trial < 3; ++trial) {
        AlgebraElement a = random_element(jt, basis, rng);
        AlgebraElement b = random_element(jt, basis, rng);
        Matrix lhs = materialize(jt, idx, multiply_elements(idx, a, b));
        Matrix rhs = materialize(jt, idx, a) * materialize(jt, idx, b);
        products_ok = products_ok && lhs == rhs;
    }
    rep["results"]["product_spot_check"] = products_ok;
    pass = pass && products_ok;

    std::string why;
    if (oracle_applicable(spec, opts, idx.n(), why)) {
        SpanBasis oracle = centralizer_nullspace(assemble_matrix(jt));
        bool dims = oracle.dim() == static_cast<int>(basis.size());
        bool spans = span_equal(oracle, structured_span(jt, idx, spec.ring));
        rep["results"]["oracle"] =
            ordered_json{{"dimension", oracle.dim()}, {"dimension_matches", dims}, {"span_equal", spans}};
        pass = pass && dims && spans;
    } else {
        rep["results"]["oracle"] = why;
    }
    return finish(std::move(rep), pass);
}

CommandResult cmd_cell(const InstanceSpec& spec, const Options& opts) {
    (void)opts;
    JordanType jt = instance_type(spec);
    ordered_json rep = report_head("cell", spec);
    bool pass = true;

    CellDatum d = build_cell_datum(jt);
    rep["results"]["block_type"] = type_echo(jt);
    ordered_json posets = ordered_json::array();
    for (int g = 0; g < d.idx.num_groups(); ++g) {
        const GroupIndex& gi = d.idx.group(g);
        ordered_json pg;
        pg["levels"] = gi.sizes.front();
        ordered_json msizes = ordered_json::array();
        for (int p = 1; p <= gi.sizes.front(); ++p) msizes.push_back(d.idx.M_size(g, p));
        pg["M_sizes"] = std::move(msizes);
        posets.push_back(std::move(pg));
    }
    rep["results"]["poset"] = std::move(posets);
    rep["results"]["cell_basis_size"] = d.basis.size();

    CellReport cr = check_cellularity(d);
    rep["results"]["axioms"] = ordered_json{{"C1", cr.c1}, {"C2", cr.c2}, {"C3", cr.c3}};
    if (!cr.pass()) rep["results"]["counterexample"] = cr.counterexample;
    pass = pass && cr.pass();

    if (field_ring(spec.ring)) {
        CellChain chain = cell_chain_simples(d);
        ordered_json surv = ordered_json::array();
        for (const auto& levels : chain.surviving) surv.push_back(levels);
        rep["results"]["cell_chain"] = ordered_json{{"surviving_levels", std::move(surv)},
                                                    {"simple_modules", chain.count}};
        int expected = 0;
        for (const auto& g : jt.groups()) expected += static_cast<int>(g.blocks.size());
        bool count_ok = chain.count == expected;
        rep["results"]["cell_chain"]["matches_class_count"] = count_ok;
        pass = pass && count_ok;

        QuasiHeredity qh = is_quasi_hereditary(jt);
        ordered_json qhj{{"value", qh.value}};
        if (!qh.value) qhj["failing_group"] = qh.failing_group;
        rep["results"]["quasi_hereditary"] = std::move(qhj);
    } else {
        rep["results"]["cell_chain"] = "skipped (needs a field ring)";
        rep["results"]["quasi_hereditary"] = "skipped (needs a field ring)";
    }
    return finish(std::move(rep), pass);
}

namespace {

ordered_json frobenius_check_json(const FrobeniusReport& fr) {
    ordered_json j{{"image_in_subalgebra", fr.image},
                   {"bimodule_law", fr.bimodule},
                   {"dual_identity_left", fr.dual_left},
                   {"dual_identity_right", fr.dual_right}};
    if (!fr.pass()) j["counterexample"] = fr.counterexample;
    return j;
}

CommandResult frobenius_group(const InstanceSpec& spec, ordered_json rep) {
    const GroupSpec& g = *spec.group;
    bool pass = true;
    rep["results"]["group_order"] = g.order();
    rep["results"]["n"] = g.n();

    auto subalg = g.subalgebra_basis();
    rep["results"]["centralizer_dimension"] = subalg.size();

    auto point = find_free_point(g);
    if (point) {
        rep["results"]["free_point"] = *point;
        FrobeniusSystem sys = group_trace_system(g, *point);
        FrobeniusReport fr = check_frobenius_system(sys);
        rep["results"]["system"] = frobenius_check_json(fr);
        pass = pass && fr.pass();

        // Separability witness d = I: sum_j x_j y_j = I.
        Matrix acc(g.ring(), g.n(), g.n());
        for (size_t i = 0; i < sys.x.size(); ++i) acc = acc + sys.x[i] * sys.y[i];
        bool sep = acc.is_identity();
        rep["results"]["separable"] = sep;
        pass = pass && sep;

        // Split witness E(|G|^{-1} I) = I when |G| is invertible.
        Scalar order = Scalar::of_int(g.ring(), g.order());
        bool invertible = g.ring().kind == RingKind::Rationals ||
                          (g.ring().kind == RingKind::PrimeField && !order.is_zero()) ||
                          (g.ring().kind == RingKind::Integers && g.order() == 1);
        if (invertible) {
            Matrix witness = Matrix::identity(g.ring(), g.n()) * order.inverse();
            bool split = sys.apply(witness).is_identity();
            rep["results"]["split"] = ordered_json{{"witness", "(1/|G|) I"}, {"verified", split}};
            pass = pass && split;
        } else {
            rep["results"]["split"] = "no witness via |G|^{-1} (group order not invertible)";
        }
    } else {
        rep["results"]["free_point"] = nullptr;
        rep["results"]["note"] = "no free point: the conjugation-trace construction does not apply; "
                                 "Frobenius property undetermined by this route";
        // Demonstrate that the standard duals fail at every point.
        ordered_json attempts = ordered_json::array();
        for (int i = 1; i <= g.n(); ++i) {
            FrobeniusSystem sys = group_trace_system(g, i, /*require_free=*/false);
            FrobeniusReport fr = check_frobenius_system(sys);
            attempts.push_back(ordered_json{{"point", i}, {"pass", fr.pass()}});
        }
        rep["results"]["attempted_points"] = std::move(attempts);
        pass = false;  // nothing verified

        // Rank obstruction: a two-dimensional centralizer over GF(p)
        // with p | n and n odd is local with free modules of even
        // rank, while M_n has odd rank n^2: not a Frobenius extension.
        if (g.is_permutation_group() && spec.ring.kind == RingKind::PrimeField &&
            g.n() % static_cast<int>(spec.ring.p) == 0 && g.n() % 2 == 1 && subalg.size() == 2) {
            rep["results"]["obstruction"] =
                "not a Frobenius extension: centralizer = span{I, all-ones} = R[X]/(X^2) is local "
                "(dim 2), its finitely generated projective modules are free of even rank, and "
                "dim M_n = " + std::to_string(g.n() * g.n()) + " is odd";
        }
    }
    return finish(std::move(rep), pass);
}

}  // namespace

CommandResult cmd_frobenius(const InstanceSpec& spec, const Options& opts) {
    (void)opts;
    ordered_json rep = report_head("frobenius", spec);
    if (spec.group) return frobenius_group(spec, std::move(rep));

    JordanType jt = instance_type(spec);
    BlockIndex idx(jt);
    bool pass = true;
    rep["results"]["block_type"] = type_echo(jt);
    rep["results"]["n"] = idx.n();

    FrobeniusSystem sys = jordan_trace_system(jt);
    FrobeniusReport fr = check_frobenius_system(sys);
    rep["results"]["system"] = frobenius_check_json(fr);
    pass = pass && fr.pass();

    Matrix d = separability_element(jt);
    bool central = true;
    for (const auto& bm : sys.subalgebra) central = central && d * bm == bm * d;
    Matrix acc(jt.ring(), idx.n(), idx.n());
    for (size_t i = 0; i < sys.x.size(); ++i) acc = acc + sys.x[i] * (d * sys.y[i]);
    bool sep = acc.is_identity();
    rep["results"]["separability"] =
        ordered_json{{"element_central", central}, {"sum_x_d_y_is_identity", sep}};
    pass = pass && central && sep;

    if (field_ring(spec.ring)) {
        SplitResult sr = split_solver(jt);
        ordered_json sj{{"witness_exists", sr.witness.has_value()},
                        {"predicate_scalar_blocks", sr.predicate}};
        if (sr.witness) {
            sj["witness"] = matrix_to_json(*sr.witness);
            sj["trace_of_witness_is_identity"] = sys.apply(*sr.witness).is_identity();
            pass = pass && sj["trace_of_witness_is_identity"].get<bool>();
        }
        rep["results"]["split"] = std::move(sj);
    } else {
        rep["results"]["split"] = "skipped (needs a field ring)";
    }
    return finish(std::move(rep), pass);
}

CommandResult cmd_structure(const InstanceSpec& spec, const Options& opts) {
    JordanType jt = instance_type(spec);
    BlockIndex idx(jt);
    ordered_json rep = report_head("structure", spec);
    bool pass = true;
    rep["results"]["block_type"] = type_echo(jt);
    rep["results"]["n"] = idx.n();

    // Block idempotents: orthogonal, sum to the identity; the group
    // idempotents additionally commute with the whole basis.
    auto basis = structured_basis(jt);
    std::vector<Matrix> basis_mats;
    for (const auto& e : basis) basis_mats.push_back(materialize(jt, idx, e));

    Matrix sum_f(jt.ring(), idx.n(), idx.n());
    bool idem_ok = true;
    std::vector<Matrix> fs;
    for (int b = 0; b < idx.num_blocks(); ++b) {
        fs.push_back(idempotent_f(jt, b));
        idem_ok = idem_ok && fs.back() * fs.back() == fs.back();
        sum_f = sum_f + fs.back();
    }
    for (int a = 0; a < idx.num_blocks(); ++a)
        for (int b = a + 1; b < idx.num_blocks(); ++b)
            idem_ok = idem_ok && (fs[a] * fs[b]).is_zero() && (fs[b] * fs[a]).is_zero();
    idem_ok = idem_ok && sum_f.is_identity();

    Matrix sum_eps(jt.ring(), idx.n(), idx.n());
    bool eps_central = true;
    for (int g = 0; g < idx.num_groups(); ++g) {
        Matrix eps = idempotent_eps(jt, g);
        sum_eps = sum_eps + eps;
        for (const auto& bm : basis_mats) eps_central = eps_central && eps * bm == bm * eps;
    }
    idem_ok = idem_ok && sum_eps.is_identity();
    rep["results"]["idempotents"] = ordered_json{{"blocks", idx.num_blocks()},
                                                 {"orthogonal_sum_identity", idem_ok},
                                                 {"group_idempotents_central", eps_central}};
    pass = pass && idem_ok && eps_central;

    rep["results"]["cartan"] = cartan_dims(jt);

    bool basic = field_ring(spec.ring) && idx.num_groups() == 1;
    if (basic)
        for (const auto& bc : jt.groups()[0].blocks) basic = basic && bc.mult == 1;
    std::string why;
    bool oracle_ok = oracle_applicable(spec, opts, idx.n(), why) && trace_form_ok(spec.ring, idx.n());
    if (oracle_applicable(spec, opts, idx.n(), why) && !trace_form_ok(spec.ring, idx.n()))
        why = "skipped (trace form needs characteristic 0 or p > n)";

    ordered_json radj;
    std::optional<SpanBasis> rad_oracle_span;
    if (basic) {
        auto rad = radical_basis_basic(jt);
        radj["formula_dimension"] = rad.size();
    }
    if (oracle_ok) {
        SpanBasis span = structured_span(jt, idx, spec.ring);
        rad_oracle_span = radical_oracle(span);
        radj["oracle_dimension"] = rad_oracle_span->dim();
        if (basic) {
            std::vector<Matrix> mats;
            for (const auto& e : radical_basis_basic(jt))
                mats.push_back(materialize(jt, idx, e).to_ring(spec.ring));
            bool agree = span_equal(*rad_oracle_span, make_span(spec.ring, idx.n(), mats));
            radj["formula_matches_oracle"] = agree;
            pass = pass && agree;
        }
    } else if (!basic) {
        radj["note"] = why.empty() ? "no closed radical formula for this type" : why;
    }
    rep["results"]["radical"] = std::move(radj);

    if (basic) {
        QuiverReport qr = gabriel_quiver(jt);
        ordered_json qj{{"vertices", qr.vertices},
                        {"arrows", qr.arrows},
                        {"relations", qr.relations},
                        {"relations_verified", qr.relations_verified}};
        rep["results"]["quiver"] = std::move(qj);
        pass = pass && qr.relations_verified;
    } else {
        rep["results"]["quiver"] = "skipped (needs a field, one eigenvalue group, multiplicity one)";
    }

    ordered_json decomp = ordered_json::array();
    for (const auto& [ev, sub] : product_decomposition(jt)) {
        ordered_json dj;
        dj["eigenvalue"] = ev.str();
        dj["type"] = type_echo(sub);
        dj["rank"] = rank_formula(sub);
        decomp.push_back(std::move(dj));
    }
    rep["results"]["product_decomposition"] = std::move(decomp);

    if (field_ring(spec.ring)) {
        bool ss = semisimple_predicate(jt);
        ordered_json ssj{{"value", ss}};
        if (rad_oracle_span) {
            bool agree = ss == (rad_oracle_span->dim() == 0);
            ssj["matches_oracle_radical"] = agree;
            pass = pass && agree;
        }
        rep["results"]["semisimple"] = std::move(ssj);
    } else {
        rep["results"]["semisimple"] = "skipped (needs a field ring)";
    }
    return finish(std::move(rep), pass);
}

CommandResult cmd_oracle(const InstanceSpec& spec, const Options& opts) {
    if (!field_ring(spec.ring)) throw Error("oracle analyses need a field ring");
    ordered_json rep = report_head("oracle", spec);

    std::vector<Matrix> targets;
    if (spec.group) {
        targets = spec.group->elements();
    } else if (spec.matrix) {
        targets = {*spec.matrix};
    } else {
        targets = {assemble_matrix(*spec.jordan_type)};
    }
    int n = targets.front().rows();
    if (opts.no_oracle) throw Error("oracle command conflicts with --no-oracle");
    if (n > opts.oracle_cap)
        throw Error("oracle size cap exceeded: n = " + std::to_string(n) + " > " +
                    std::to_string(opts.oracle_cap));

    SpanBasis span = centralizer_nullspace_set(targets);
    rep["results"]["n"] = n;
    rep["results"]["centralizer"] = ordered_json{{"dimension", span.dim()}};
    ordered_json mats = ordered_json::array();
    for (const auto& m : span.mats) mats.push_back(matrix_to_json(m));
    rep["results"]["centralizer"]["basis"] = std::move(mats);

    if (trace_form_ok(spec.ring, n)) {
        SpanBasis rad = radical_oracle(span);
        ordered_json rj{{"dimension", rad.dim()}};
        ordered_json rmats = ordered_json::array();
        for (const auto& m : rad.mats) rmats.push_back(matrix_to_json(m));
        rj["basis"] = std::move(rmats);
        rep["results"]["radical"] = std::move(rj);
        rep["results"]["simple_modules"] = simple_count_oracle(span);
    } else {
        rep["results"]["radical"] = "skipped (trace form needs characteristic 0 or p > n)";
        rep["results"]["simple_modules"] = "skipped (trace form needs characteristic 0 or p > n)";
    }
    return finish(std::move(rep), true);
}

CommandResult run_command(const std::string& name, const InstanceSpec& spec, const Options& opts) {
    if (name == "basis") return cmd_basis(spec, opts);
    if (name == "cell") return cmd_cell(spec, opts);
    if (name == "frobenius") return cmd_frobenius(spec, opts);
    if (name == "structure") return cmd_structure(spec, opts);
    if (name == "oracle") return cmd_oracle(spec, opts);
    throw Error("unknown command \"" + name + "\"");
}

}  // namespace cent
