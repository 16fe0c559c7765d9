#include "alternator/harness.hpp"

#include <algorithm>
#include <utility>

namespace alternator {

namespace {

using nlohmann::json;

std::vector<std::string> elem_strs(const std::vector<FieldElement>& es) {
    std::vector<std::string> out;
    out.reserve(es.size());
    for (const auto& e : es) out.push_back(e.str());
    return out;
}

std::string join(const std::vector<std::string>& parts, const char* sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

SuiteVerdict pass_verdict(std::string note = "") { return {"pass", std::move(note)}; }
SuiteVerdict fail_verdict(std::string witness) { return {"fail", std::move(witness)}; }
SuiteVerdict skip_verdict(std::string reason) { return {"skipped", std::move(reason)}; }

std::string conditions_str(const std::vector<std::pair<std::string, bool>>& cs) {
    std::vector<std::string> parts;
    for (const auto& [k, v] : cs) parts.push_back(k + "=" + bool_str(v));
    return join(parts);
}

}  // namespace

bool SuiteRun::has_condition(const std::string& name) const {
    for (const auto& [k, v] : conditions)
        if (k == name) return true;
    return false;
}

bool SuiteRun::condition(const std::string& name) const {
    for (const auto& [k, v] : conditions)
        if (k == name) return v;
    throw Error("condition not evaluated: " + name);
}

json CheckReport::to_json() const {
    json doc;
    doc["instance_id"] = instance_id;
    doc["dim_S"] = dim_s;
    doc["q_sigma"] = q_sigma;
    doc["q_prime"] = q_prime;
    doc["direct"] = direct;
    doc["s_field"] = s_field;
    if (pf_slots) doc["pf_slots"] = *pf_slots;
    json ss = json::object();
    for (const auto& [name, sv] : suites) {
        json e;
        e["verdict"] = sv.verdict;
        if (!sv.witness.empty()) e["witness"] = sv.witness;
        ss[name] = std::move(e);
    }
    doc["suites"] = std::move(ss);
    return doc;
}

CheckReport CheckReport::from_json(const json& doc) {
    CheckReport r;
    r.instance_id = doc.at("instance_id").get<std::string>();
    r.dim_s = doc.at("dim_S").get<std::size_t>();
    r.q_sigma = doc.at("q_sigma").get<std::vector<std::string>>();
    r.q_prime = doc.at("q_prime").get<std::vector<std::string>>();
    r.direct = doc.at("direct").get<bool>();
    r.s_field = doc.at("s_field").get<std::string>();
    if (doc.contains("pf_slots")) r.pf_slots = doc.at("pf_slots").get<std::vector<std::string>>();
    for (const auto& [name, e] : doc.at("suites").items()) {
        SuiteVerdict sv;
        sv.verdict = e.at("verdict").get<std::string>();
        if (e.contains("witness")) sv.witness = e.at("witness").get<std::string>();
        r.suites[name] = std::move(sv);
    }
    return r;
}

bool CheckReport::all_pass() const {
    for (const auto& [name, sv] : suites)
        if (sv.verdict == "fail") return false;
    return true;
}

CheckReport compute_invariants(const AlgebraPtr& A, const std::string& id, Exec exec) {
    CheckReport r;
    r.instance_id = id;
    const AlternatorData data = alternator_subalgebra(*A, exec);
    r.dim_s = data.s_basis.dim();
    r.q_sigma = elem_strs(data.q_coeffs);
    r.q_prime = elem_strs(data.q_prime_coeffs);
    r.direct = psi_kernel(*A, exec).dim() == 0;
    r.s_field = s_field_test(data, *A, exec).str();
    try {
        r.pf_slots = elem_strs(phi_and_pfister(*A, exec).alphas);
    } catch (const UnsupportedProvenance&) {
        // no Pfister invariant for this provenance; leave the field absent
    }
    return r;
}

SuiteRun suite_theorem_direct(const AlgebraPtr& A, Exec exec) {
    SuiteRun run;
    const AlternatorData data = alternator_subalgebra(*A, exec);
    const bool d1 = psi_kernel(*A, exec).dim() == 0;
    const bool d2 = f2span_dim(A->field(), data.q_coeffs, exec) == data.q_coeffs.size();
    const SFieldResult fr = s_field_test(data, *A, exec);
    run.conditions = {{"psi_kernel_trivial", d1}, {"q_anisotropic", d2}};
    if (fr.verdict != SFieldVerdict::inconclusive)
        run.conditions.emplace_back("s_is_field", fr.verdict == SFieldVerdict::field);

    bool agree = true;
    for (const auto& [k, v] : run.conditions) agree = agree && v == d1;
    if (!agree) {
        run.summary = fail_verdict("conclusive verdicts disagree: " + conditions_str(run.conditions) +
                                   "; q = [" + join(elem_strs(data.q_coeffs)) + "]");
        return run;
    }
    if (d1) {
        // moreover: in the direct case every element of S squares into F
        const auto& basis = data.s_basis.basis();
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (!A->as_scalar(A->multiply(basis[i], basis[i]))) {
                run.summary =
                    fail_verdict("direct, but S-basis vector " + std::to_string(i) +
                                 " has a non-scalar square: [" + join(elem_strs(basis[i])) + "]");
                return run;
            }
        run.conditions.emplace_back("squares_scalar", true);
    }
    std::string note = "agreed on " + bool_str(d1);
    if (fr.verdict == SFieldVerdict::inconclusive) note += "; field test inconclusive";
    run.summary = pass_verdict(note);
    return run;
}

SuiteRun suite_theorem_isotropic(const AlgebraPtr& A, Exec exec) {
    SuiteRun run;
    const PhiData pd = phi_and_pfister(*A, exec);
    const AlternatorData data = alternator_subalgebra(*A, exec);
    std::vector<std::string> notes;

    if (std::holds_alternative<MatrixProvenance>(A->provenance()))
        run.conditions.emplace_back("sigma_anisotropic", !split_isotropy(*A).isotropic);
    else
        notes.push_back("sigma-anisotropy skipped (non-split provenance)");
    run.conditions.emplace_back("direct", psi_kernel(*A, exec).dim() == 0);
    run.conditions.emplace_back("pf_anisotropic", pd.pf.is_anisotropic());
    run.conditions.emplace_back(
        "q_anisotropic", f2span_dim(A->field(), data.q_coeffs, exec) == data.q_coeffs.size());
    const SFieldResult phif = commutative_field_test(*A, pd.phi_subalgebra, exec);
    if (phif.verdict != SFieldVerdict::inconclusive)
        run.conditions.emplace_back("phi_is_field", phif.verdict == SFieldVerdict::field);
    else
        notes.push_back("phi field test inconclusive");
    const SFieldResult sf = s_field_test(data, *A, exec);
    if (sf.verdict != SFieldVerdict::inconclusive)
        run.conditions.emplace_back("s_is_field", sf.verdict == SFieldVerdict::field);
    else
        notes.push_back("S field test inconclusive");
    run.conditions.emplace_back("phi_equals_s", pd.phi_subalgebra == data.s_basis);
    run.conditions.emplace_back("s_in_sym", A->alt_sym().sym.contains_subspace(data.s_basis));

    const bool first = run.conditions.front().second;
    bool agree = true;
    for (const auto& [k, v] : run.conditions) agree = agree && v == first;
    if (!agree) {
        run.summary = fail_verdict("conditions disagree: " + conditions_str(run.conditions) +
                                   "; pf slots = [" + join(elem_strs(pd.pf.slots())) + "], q = [" +
                                   join(elem_strs(data.q_coeffs)) + "]");
    } else {
        std::string note = "agreed on " + bool_str(first);
        if (!notes.empty()) note += "; " + join(notes, "; ");
        run.summary = pass_verdict(note);
    }
    return run;
}

SuiteRun qp_compare(const FieldPtr& F, const std::vector<FieldElement>& q_coeffs,
                    const std::vector<FieldElement>& pf_coeffs, Exec exec) {
    SuiteRun run;
    const std::size_t dq = f2span_dim(F, q_coeffs, exec);
    const std::size_t dp = f2span_dim(F, pf_coeffs, exec);
    std::vector<FieldElement> both = q_coeffs;
    both.insert(both.end(), pf_coeffs.begin(), pf_coeffs.end());
    const std::size_t du = f2span_dim(F, both, exec);
    const bool equal = dq == dp && dp == du;
    run.conditions.emplace_back("value_spans_equal", equal);
    if (equal) {
        run.summary = pass_verdict("common span dimension " + std::to_string(dq));
        return run;
    }
    auto outside = [&](const std::vector<FieldElement>& probe,
                       const std::vector<FieldElement>& base) -> std::optional<FieldElement> {
        const std::size_t db = f2span_dim(F, base, exec);
        for (const auto& c : probe) {
            std::vector<FieldElement> ext = base;
            ext.push_back(c);
            if (f2span_dim(F, ext, exec) > db) return c;
        }
        return std::nullopt;
    };
    std::string w = "span dims q=" + std::to_string(dq) + " pf=" + std::to_string(dp) +
                    " union=" + std::to_string(du);
    if (const auto c = outside(q_coeffs, pf_coeffs))
        w += "; q value outside the Pfister span: " + c->str();
    else if (const auto c = outside(pf_coeffs, q_coeffs))
        w += "; Pfister value outside the q span: " + c->str();
    run.summary = fail_verdict(w);
    return run;
}

SuiteRun suite_prop_qp(const AlgebraPtr& A, Exec exec) {
    const PhiData pd = phi_and_pfister(*A, exec);
    const AlternatorData data = alternator_subalgebra(*A, exec);
    return qp_compare(A->field(), data.q_coeffs, pd.pf.expand().coeffs(), exec);
}

SuiteRun suite_theorem_tran(const AlgebraPtr& A, Exec exec) {
    SuiteRun run;
    const auto* mp = std::get_if<MatrixProvenance>(&A->provenance());
    if (!mp) {
        run.summary = skip_verdict("non-matrix provenance");
        return run;
    }
    const AlternatorData data = alternator_subalgebra(*A, exec);
    const bool profile = data.q_form().matches_transpose_profile(mp->n);
    run.conditions.emplace_back("profile_matches", profile);

    const auto& u = mp->u_diag;
    const bool proportional =
        std::all_of(u.begin(), u.end(), [&](const FieldElement& e) { return e == u[0]; });
    std::optional<bool> expected;
    if (proportional)
        expected = true;
    else if (mp->n >= 2 && f2span_dim(A->field(), u, exec) == u.size())
        expected = false;
    if (!expected) {
        run.summary = skip_verdict("no ground-truth prediction for this diagonal; computed profile " +
                                   bool_str(profile));
        return run;
    }
    run.conditions.emplace_back("expected_profile", *expected);
    if (profile == *expected)
        run.summary = pass_verdict("agreed on " + bool_str(profile));
    else
        run.summary = fail_verdict("computed profile " + bool_str(profile) + " but ground truth " +
                                   bool_str(*expected) + "; q = [" +
                                   join(elem_strs(data.q_coeffs)) + "]");
    return run;
}

SuiteRun suite_classification(const AlgebraPtr& A, const AlgebraPtr& B, Exec exec) {
    SuiteRun run;
    const PhiData pa = phi_and_pfister(*A, exec);
    const PhiData pb = phi_and_pfister(*B, exec);
    const AlternatorData da = alternator_subalgebra(*A, exec);
    const AlternatorData db = alternator_subalgebra(*B, exec);

    const bool q_iso = da.q_form().isometric(db.q_form());
    const bool qp_iso = da.q_prime_form().isometric(db.q_prime_form());
    const bool pf_iso = pa.pf.isometric(pb.pf);
    const bool both_aniso = pa.pf.is_anisotropic() && pb.pf.is_anisotropic();
    run.conditions = {{"q_isometric", q_iso},
                      {"q_prime_isometric", qp_iso},
                      {"pf_isometric", pf_iso},
                      {"both_pf_anisotropic", both_aniso}};

    const auto* ca = std::get_if<ConjugateProvenance>(&A->provenance());
    const auto* cb = std::get_if<ConjugateProvenance>(&B->provenance());
    const bool conjugate_pair = (cb && cb->base == A) || (ca && ca->base == B);

    std::vector<std::string> fails;
    if (conjugate_pair) {
        run.conditions.emplace_back("conjugate_pair", true);
        if (!q_iso || !qp_iso) fails.push_back("conjugate pair with non-isometric forms");
        if (!pf_iso) fails.push_back("conjugate pair with non-isometric Pfister invariants");
    }
    if (both_aniso) {
        if (qp_iso != pf_iso) fails.push_back("q'-isometry and Pfister isometry disagree");
    } else if (q_iso && !pf_iso) {
        fails.push_back("isometric q with non-isometric Pfister invariants");
    }
    if (fails.empty()) {
        run.summary = pass_verdict(conditions_str(run.conditions));
    } else {
        run.summary = fail_verdict(
            join(fails, "; ") + "; q = [" + join(elem_strs(da.q_coeffs)) + "] vs [" +
            join(elem_strs(db.q_coeffs)) + "]; pf slots = [" + join(elem_strs(pa.pf.slots())) +
            "] vs [" + join(elem_strs(pb.pf.slots())) + "]");
    }
    return run;
}

CheckReport regression_fixtures() {
    // (a) u = diag(1, a, b, ab+1) with the explicit non-symmetric member of S
    auto F = Field::rationals({"a", "b"});
    const FieldElement a = F->variable(0), b = F->variable(1), one = F->one();
    auto A = InvolutionAlgebra::matrix_algebra(F, 4, {one, a, b, a * b + one});
    Vec x(16, F->zero());
    x[0 * 4 + 1] = (a * b).inv();
    x[0 * 4 + 2] = b.inv();
    x[1 * 4 + 3] = a * (one + a * b).inv();
    x[2 * 4 + 0] = one;
    x[2 * 4 + 3] = (one + a * b).inv();
    x[3 * 4 + 1] = one + (a * b).inv();

    CheckReport rep = compute_invariants(A, "regression_fixtures");
    {
        std::vector<std::string> fails;
        const auto qv = q_value(*A, x);
        if (!qv)
            fails.push_back("x is outside S");
        else if (*qv != b.inv())
            fails.push_back("q(x) = " + qv->str() + ", expected " + b.inv().str());
        if (A->apply_invol(x) == x) fails.push_back("x is unexpectedly symmetric");
        if (psi_kernel(*A).dim() != 0) fails.push_back("sigma is not direct");
        rep.suites["rank4_anisotropic"] =
            fails.empty() ? pass_verdict()
                          : fail_verdict(join(fails, "; ") + "; x = [" + join(elem_strs(x)) + "]");
    }
    {
        auto F3 = Field::rationals({"t1", "t2", "t3"});
        auto A3 = InvolutionAlgebra::matrix_algebra(
            F3, 3, {F3->variable(0), F3->variable(1), F3->variable(2)});
        const AlternatorData d3 = alternator_subalgebra(*A3);
        std::vector<std::string> fails;
        if (d3.s_basis.dim() != 1)
            fails.push_back("dim S = " + std::to_string(d3.s_basis.dim()) + ", expected 1");
        else if (d3.q_coeffs != std::vector<FieldElement>{F3->one()})
            fails.push_back("q = [" + join(elem_strs(d3.q_coeffs)) + "], expected [1]");
        rep.suites["rank3_diagonal"] =
            fails.empty() ? pass_verdict() : fail_verdict(join(fails, "; "));
    }
    {
        std::vector<std::string> fails;
        for (const auto& Ft : {Field::gf2k(1), Field::rationals({"t"})})
            for (int n : {2, 3, 4}) {
                auto At = InvolutionAlgebra::matrix_algebra(
                    Ft, n, std::vector<FieldElement>(n, Ft->one()));
                const AlternatorData dt = alternator_subalgebra(*At);
                const std::string tag =
                    (Ft->is_perfect() ? "GF(2)" : "GF(2)(t)") + std::string(" n=") +
                    std::to_string(n);
                if (dt.s_basis.dim() != static_cast<std::size_t>(n * n - n + 1))
                    fails.push_back(tag + ": dim S = " + std::to_string(dt.s_basis.dim()));
                else if (!dt.q_form().matches_transpose_profile(n))
                    fails.push_back(tag + ": q = [" + join(elem_strs(dt.q_coeffs)) + "]");
                else if (f2span_dim(Ft, dt.q_coeffs) != 1)
                    fails.push_back(tag + ": q values span dimension > 1");
            }
        rep.suites["transpose_profile"] =
            fails.empty() ? pass_verdict() : fail_verdict(join(fails, "; "));
    }
    return rep;
}

FieldPtr sample_field(Sampler& s) {
    switch (s.pick(6)) {
        case 0: return Field::gf2k(1);
        case 1: return Field::gf2k(2);
        case 2: return Field::gf2k(3);
        case 3: return Field::rationals({"t"});
        case 4: return Field::rationals({"t1", "t2"});
        default: return Field::rationals({"t1", "t2", "t3"});
    }
}

AlgebraPtr sample_split_instance(Sampler& s) {
    const FieldPtr F = sample_field(s);
    const int n = 2 + static_cast<int>(s.pick(3));
    std::vector<FieldElement> u;
    for (int i = 0; i < n; ++i) u.push_back(s.nonzero(F, 2, 2));
    return InvolutionAlgebra::matrix_algebra(F, n, u);
}

namespace {

AlgebraPtr sample_factor(Sampler& s, const FieldPtr& F) {
    if (s.coin()) return InvolutionAlgebra::matrix_algebra(F, 2, {F->one(), s.nonzero(F, 2, 2)});
    for (int attempt = 0; attempt < 8; ++attempt) {
        const FieldElement a = s.elem(F, 2, 2);
        const FieldElement b = s.nonzero(F, 2, 2);
        Vec u(4, F->zero());
        switch (s.pick(3)) {
            case 0: u[2] = F->one(); break;                                           // j
            case 1: u[3] = F->one(); break;                                           // ij
            default: u[0] = s.elem(F, 1, 1); u[2] = F->one(); u[3] = s.elem(F, 1, 1); break;
        }
        try {
            return InvolutionAlgebra::quaternion_algebra(a, b, u);
        } catch (const Error&) {
            // sampled u was not a unit; draw again
        }
    }
    return InvolutionAlgebra::matrix_algebra(F, 2, {F->one(), s.nonzero(F, 2, 2)});
}

}  // namespace

AlgebraPtr sample_decomposable_instance(Sampler& s, int max_factors) {
    const FieldPtr F = sample_field(s);
    int nf = 1 + static_cast<int>(s.pick(static_cast<std::uint64_t>(max_factors)));
    // keep the Frobenius-descent systems small: dimension-64 instances only
    // over fields with at most one variable
    if (F->kind() == Field::Kind::ratfunc && F->num_vars() >= 2 && nf > 2) nf = 2;
    if (nf == 1 && s.coin()) {
        const FieldElement g1 = s.nonzero(F, 2, 2), g2 = s.nonzero(F, 2, 2);
        return InvolutionAlgebra::matrix_algebra(F, 4, {F->one(), g1, g2, g1 * g2});
    }
    AlgebraPtr acc = sample_factor(s, F);
    for (int i = 1; i < nf; ++i) acc = InvolutionAlgebra::tensor(acc, sample_factor(s, F));
    return acc;
}

std::pair<AlgebraPtr, AlgebraPtr> sample_anisotropic_pair(Sampler& s) {
    const FieldPtr F =
        s.coin() ? Field::rationals({"t1", "t2"}) : Field::rationals({"t1", "t2", "t3"});
    auto slot = [&]() { return s.nonzero(F, 1, 2); };
    const Vec uj{F->zero(), F->zero(), F->one(), F->zero()};
    const Vec uij{F->zero(), F->zero(), F->zero(), F->one()};
    // the two sides share the factor algebras (so they are isomorphic by
    // construction) and differ only in the involution parameters
    for (int attempt = 0; attempt < 64; ++attempt) {
        const int nf = 1 + static_cast<int>(s.pick(2));
        AlgebraPtr A, B;
        bool ok = true;
        for (int i = 0; i < nf && ok; ++i) {
            AlgebraPtr fa, fb;
            if (s.coin()) {
                fa = InvolutionAlgebra::matrix_algebra(F, 2, {F->one(), slot()});
                fb = InvolutionAlgebra::matrix_algebra(F, 2, {F->one(), slot()});
            } else {
                const FieldElement a = s.elem(F, 1, 1), b = slot();
                try {
                    fa = InvolutionAlgebra::quaternion_algebra(a, b, uj);
                    fb = InvolutionAlgebra::quaternion_algebra(a, b, s.coin() ? uij : uj);
                } catch (const Error&) {
                    ok = false;  // ij was not a unit (a = 0); redraw the pair
                    break;
                }
            }
            A = A ? InvolutionAlgebra::tensor(A, fa) : fa;
            B = B ? InvolutionAlgebra::tensor(B, fb) : fb;
        }
        if (!ok) continue;
        if (phi_and_pfister(*A).pf.is_anisotropic() && phi_and_pfister(*B).pf.is_anisotropic())
            return {A, B};
    }
    return {InvolutionAlgebra::matrix_algebra(F, 2, {F->one(), F->variable(0)}),
            InvolutionAlgebra::matrix_algebra(F, 2, {F->one(), F->variable(1)})};
}

Vec sample_sparse_unit(Sampler& s, const InvolutionAlgebra& a) {
    for (int attempt = 0; attempt < 12; ++attempt) {
        Vec g = a.unit();
        const std::size_t j = s.pick(static_cast<std::uint64_t>(a.dim()));
        g[j] += s.nonzero(a.field(), 1, 1);
        if (a.inverse(g)) return g;
    }
    return a.unit();
}

std::pair<std::string, bool> run_selftest(std::uint64_t seed) {
    Sampler s(seed);
    std::vector<CheckReport> reports;
    reports.push_back(regression_fixtures());

    auto id = [&](const char* kind, int i) {
        std::string n = std::to_string(i);
        if (n.size() < 2) n = "0" + n;
        return "seed" + std::to_string(seed) + "-" + kind + "-" + n;
    };

    for (int i = 0; i < 8; ++i) {
        const AlgebraPtr A = sample_split_instance(s);
        CheckReport r = compute_invariants(A, id("split", i));
        r.suites["direct"] = suite_theorem_direct(A).summary;
        r.suites["tran"] = suite_theorem_tran(A).summary;
        reports.push_back(std::move(r));
    }
    for (int i = 0; i < 5; ++i) {
        const AlgebraPtr A = sample_decomposable_instance(s, 2);
        CheckReport r = compute_invariants(A, id("decomposable", i));
        r.suites["direct"] = suite_theorem_direct(A).summary;
        r.suites["isotropic"] = suite_theorem_isotropic(A).summary;
        r.suites["qp"] = suite_prop_qp(A).summary;
        reports.push_back(std::move(r));
    }
    {
        const AlgebraPtr A = sample_decomposable_instance(s, 2);
        const AlgebraPtr B = InvolutionAlgebra::conjugate(A, sample_sparse_unit(s, *A));
        CheckReport r = compute_invariants(A, id("pair-conjugate", 0));
        r.suites["classification"] = suite_classification(A, B).summary;
        reports.push_back(std::move(r));
    }
    for (int i = 0; i < 2; ++i) {
        const auto [A, B] = sample_anisotropic_pair(s);
        CheckReport r = compute_invariants(A, id("pair-anisotropic", i));
        r.suites["classification"] = suite_classification(A, B).summary;
        reports.push_back(std::move(r));
    }

    std::sort(reports.begin(), reports.end(),
              [](const CheckReport& a, const CheckReport& b) { return a.instance_id < b.instance_id; });
    json arr = json::array();
    bool ok = true;
    for (const auto& r : reports) {
        arr.push_back(r.to_json());
        ok = ok && r.all_pass();
    }
    json out;
    out["seed"] = seed;
    out["all_pass"] = ok;
    out["reports"] = std::move(arr);
    return {out.dump(2) + "\n", ok};
}

}  // namespace alternator
