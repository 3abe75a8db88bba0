#include "monogen/io.hpp"

#include <fstream>

namespace monogen::io {

namespace {

// Location-tracking view of a json node; all failures carry file and path.
class Cur {
public:
    Cur(const json& j, const std::string& file, std::string path = "")
        : j_(&j), file_(&file), path_(std::move(path)) {}

    const json& raw() const { return *j_; }
    const std::string& path() const { return path_; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(*file_, path_, msg); }

    Cur key(const std::string& k) const {
        if (!j_->is_object()) fail("expected an object");
        auto it = j_->find(k);
        if (it == j_->end()) fail("missing field '" + k + "'");
        return Cur(*it, *file_, path_ + "/" + k);
    }

    bool has(const std::string& k) const { return j_->is_object() && j_->contains(k); }

    Cur idx(std::size_t i) const {
        if (!j_->is_array()) fail("expected an array");
        if (i >= j_->size()) fail("index " + std::to_string(i) + " out of bounds");
        return Cur((*j_)[i], *file_, path_ + "/" + std::to_string(i));
    }

    std::size_t size() const {
        if (!j_->is_array()) fail("expected an array");
        return j_->size();
    }

    double as_double() const {
        if (!j_->is_number()) fail("expected a number");
        return j_->get<double>();
    }

    int as_int() const {
        if (!j_->is_number_integer()) fail("expected an integer");
        return j_->get<int>();
    }

private:
    const json* j_;
    const std::string* file_;
    std::string path_;
};

cplx parse_complex(const Cur& c) {
    if (c.raw().is_array()) {
        if (c.size() != 2) c.fail("complex array form needs exactly [re, im]");
        return {c.idx(0).as_double(), c.idx(1).as_double()};
    }
    if (c.raw().is_object()) {
        double re = c.key("re").as_double();
        double im = c.has("im") ? c.key("im").as_double() : 0.0;
        return {re, im};
    }
    if (c.raw().is_number()) return {c.raw().get<double>(), 0.0};
    c.fail("expected a complex value: {\"re\":..,\"im\":..}, [re, im], or a number");
}

} // namespace

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, "", "cannot open file");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(path, "", e.what());
    }
    return j;
}

Algebra parse_algebra(const json& j, const std::string& file) {
    Cur root(j, file);
    int m = root.key("m").as_int();
    int n = root.key("n").as_int();

    UpsilonMap ups;
    if (root.has("upsilon")) {
        Cur arr = root.key("upsilon");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            Cur e = arr.idx(i);
            int r = e.key("r").as_int();
            int s = e.key("s").as_int();
            int p = e.key("p").as_int();
            cplx c = e.has("c") ? parse_complex(e.key("c"))
                                : cplx{e.key("re").as_double(),
                                       e.has("im") ? e.key("im").as_double() : 0.0};
            auto canon = std::make_tuple(std::min(r, s), std::max(r, s), p);
            auto it = ups.find(canon);
            if (it != ups.end() && it->second != c)
                e.fail("conflicting value for the symmetric pair of this entry");
            ups[canon] = c;
        }
    }

    std::vector<int> u_map;
    if (n > m) {
        Cur um = root.key("u_map");
        if (!um.raw().is_object()) um.fail("expected an object keyed by nilpotent index");
        for (int s = m + 1; s <= n; ++s) {
            std::string key = std::to_string(s);
            if (!um.has(key)) um.fail("missing entry for nilpotent index " + key);
            u_map.push_back(um.key(key).as_int());
        }
        if (um.raw().size() != static_cast<std::size_t>(n - m))
            um.fail("extra entries beyond the nilpotent indices m+1..n");
    } else if (root.has("u_map")) {
        Cur um = root.key("u_map");
        if (!um.raw().is_object() || !um.raw().empty())
            um.fail("semi-simple algebras take an empty u_map");
    }

    try {
        return Algebra(m, n, std::move(ups), std::move(u_map));
    } catch (const std::invalid_argument& e) {
        root.fail(e.what());
    }
}

VariableFrame parse_frame(const json& j, const Algebra& alg, const std::string& file) {
    Cur root(j, file);
    int k = root.key("k").as_int();
    Cur vecs = root.key("vectors");
    if (static_cast<int>(vecs.size()) != k - 1)
        vecs.fail("expected k-1 = " + std::to_string(k - 1) + " vectors");
    std::vector<std::vector<cplx>> rows;
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        Cur row = vecs.idx(i);
        if (static_cast<int>(row.size()) != alg.n())
            row.fail("vector length must equal n = " + std::to_string(alg.n()));
        std::vector<cplx> r;
        for (std::size_t c = 0; c < row.size(); ++c) r.push_back(parse_complex(row.idx(c)));
        rows.push_back(std::move(r));
    }
    try {
        return VariableFrame(alg, std::move(rows));
    } catch (const std::invalid_argument& e) {
        root.fail(e.what());
    }
}

HolomorphicFn parse_holomorphic(const json& j, const std::string& file) {
    Cur root(j, file);
    Cur terms = root.key("terms");
    std::vector<HolomorphicFn::Term> out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        Cur t = terms.idx(i);
        HolomorphicFn::Term term;
        Cur poly = t.key("poly");
        for (std::size_t c = 0; c < poly.size(); ++c)
            term.poly.push_back(parse_complex(poly.idx(c)));
        if (t.has("exp_lambda") && !t.key("exp_lambda").raw().is_null())
            term.exp_lambda = parse_complex(t.key("exp_lambda"));
        out.push_back(std::move(term));
    }
    return HolomorphicFn(std::move(out));
}

MonogenicFunction parse_monogenic(const json& j, const Algebra& alg, const VariableFrame& frame,
                                  const std::string& file) {
    Cur root(j, file);
    MonogenicFunction mf{frame, {}, {}};
    Cur F = root.key("F");
    if (static_cast<int>(F.size()) != alg.m())
        F.fail("expected m = " + std::to_string(alg.m()) + " components");
    for (std::size_t i = 0; i < F.size(); ++i)
        mf.F.push_back(parse_holomorphic(F.idx(i).raw(), file));
    if (alg.n() > alg.m() || root.has("G")) {
        Cur G = root.key("G");
        if (static_cast<int>(G.size()) != alg.n() - alg.m())
            G.fail("expected n-m = " + std::to_string(alg.n() - alg.m()) + " components");
        for (std::size_t i = 0; i < G.size(); ++i)
            mf.G.push_back(parse_holomorphic(G.idx(i).raw(), file));
    }
    return mf;
}

PDESpec parse_pde(const json& j, const std::string& file) {
    Cur root(j, file);
    PDESpec pde;
    pde.order = root.key("N").as_int();
    Cur terms = root.key("terms");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        Cur t = terms.idx(i);
        PdeTerm term;
        Cur alpha = t.key("alpha");
        for (std::size_t a = 0; a < alpha.size(); ++a)
            term.alpha.push_back(alpha.idx(a).as_int());
        term.c = t.key("c").as_double();
        pde.terms.push_back(std::move(term));
    }
    auto errs = pde_errors(pde);
    if (!errs.empty()) root.fail(errs.front());
    return pde;
}

AlgebraElement parse_element(const json& j, int n, const std::string& file) {
    Cur root(j, file);
    Cur coeffs = root.raw().is_object() ? root.key("coeffs") : root;
    if (static_cast<int>(coeffs.size()) != n)
        coeffs.fail("expected n = " + std::to_string(n) + " coefficients");
    AlgebraElement out(n);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        out.coeffs[i] = parse_complex(coeffs.idx(i));
    return out;
}

std::vector<double> parse_point(const json& j, const std::string& file) {
    Cur root(j, file);
    Cur arr = root.raw().is_object() ? root.key("x") : root;
    std::vector<double> x;
    for (std::size_t i = 0; i < arr.size(); ++i) x.push_back(arr.idx(i).as_double());
    if (x.empty()) arr.fail("point needs at least one coordinate");
    return x;
}

GridSpec parse_grid(const json& j, const std::string& file) {
    Cur root(j, file);
    Cur axes = root.key("axes");
    GridSpec g;
    for (std::size_t i = 0; i < axes.size(); ++i) {
        Cur a = axes.idx(i);
        GridSpec::Axis axis;
        axis.lo = a.key("min").as_double();
        axis.hi = a.key("max").as_double();
        axis.count = a.key("count").as_int();
        if (axis.count < 1) a.fail("axis count must be positive");
        g.axes.push_back(axis);
    }
    if (g.axes.empty()) axes.fail("grid needs at least one axis");
    return g;
}

std::vector<std::pair<double, double>> parse_box(const json& j, const std::string& file) {
    Cur root(j, file);
    std::vector<std::pair<double, double>> box;
    for (std::size_t i = 0; i < root.size(); ++i) {
        Cur iv = root.idx(i);
        if (iv.size() != 2) iv.fail("interval needs exactly [lo, hi]");
        box.emplace_back(iv.idx(0).as_double(), iv.idx(1).as_double());
    }
    return box;
}

json complex_json(cplx c) { return json{{"re", c.real()}, {"im", c.imag()}}; }

json element_json(const AlgebraElement& a) {
    json coeffs = json::array();
    for (const cplx& c : a.coeffs) coeffs.push_back(complex_json(c));
    return json{{"coeffs", coeffs}};
}

json algebra_json(const Algebra& alg) {
    json ups = json::array();
    for (const auto& [key, c] : alg.upsilon_entries()) {
        auto [r, s, p] = key;
        ups.push_back(json{{"r", r}, {"s", s}, {"p", p}, {"re", c.real()}, {"im", c.imag()}});
    }
    json umap = json::object();
    for (int s = alg.m() + 1; s <= alg.n(); ++s) umap[std::to_string(s)] = alg.u_of(s);
    return json{{"m", alg.m()}, {"n", alg.n()}, {"upsilon", ups}, {"u_map", umap}};
}

json frame_json(const VariableFrame& frame) {
    json vecs = json::array();
    for (int j = 2; j <= frame.k(); ++j) {
        json row = json::array();
        for (int r = 1; r <= frame.n(); ++r) row.push_back(complex_json(frame.a(j, r)));
        vecs.push_back(row);
    }
    return json{{"k", frame.k()}, {"vectors", vecs}};
}

json holomorphic_json(const HolomorphicFn& fn) {
    json terms = json::array();
    for (const auto& t : fn.terms()) {
        json poly = json::array();
        for (const cplx& c : t.poly) poly.push_back(complex_json(c));
        json term{{"poly", poly}};
        term["exp_lambda"] = t.exp_lambda ? complex_json(*t.exp_lambda) : json(nullptr);
        terms.push_back(term);
    }
    return json{{"terms", terms}};
}

json monogenic_json(const MonogenicFunction& mf) {
    json F = json::array(), G = json::array();
    for (const auto& fn : mf.F) F.push_back(holomorphic_json(fn));
    for (const auto& fn : mf.G) G.push_back(holomorphic_json(fn));
    return json{{"F", F}, {"G", G}};
}

json pde_json(const PDESpec& pde) {
    json terms = json::array();
    for (const auto& t : pde.terms) terms.push_back(json{{"alpha", t.alpha}, {"c", t.c}});
    return json{{"N", pde.order}, {"terms", terms}};
}

static const char* violation_kind_str(Violation::Kind k) {
    switch (k) {
        case Violation::Kind::UpsilonIndexRange: return "upsilon_index_range";
        case Violation::Kind::UMapRange: return "u_map_range";
        case Violation::Kind::AssocA1: return "associativity_nilpotent";
        case Violation::Kind::AssocA2: return "associativity_idempotent";
        case Violation::Kind::Prop2NonzeroUpsilon: return "distinct_u_nonzero_product";
    }
    return "unknown";
}

static json violation_json(const Violation& v) {
    return json{{"kind", violation_kind_str(v.kind)},
                {"triple", {v.i, v.j, v.k}},
                {"message", v.message}};
}

json validation_json(const ValidationReport& rep) {
    json structural = json::array(), violations = json::array();
    for (const auto& v : rep.structural) structural.push_back(violation_json(v));
    for (const auto& v : rep.violations) violations.push_back(violation_json(v));
    return json{{"valid", rep.valid()},
                {"semi_simple", rep.semi_simple},
                {"prop1_case", rep.prop1_case},
                {"prop2_case", rep.prop2_case},
                {"structural_errors", structural},
                {"violations", violations}};
}

json cr_json(const CauchyRiemannReport& rep, double tol, bool pass) {
    return json{{"step", rep.step},
                {"residuals", rep.residuals},
                {"max_residual", rep.max_residual},
                {"tol", tol},
                {"pass", pass}};
}

json scan_json(const ScanReport& rep) {
    return json{{"min_abs_p", rep.min_abs},
                {"min_p", rep.min_val},
                {"max_p", rep.max_val},
                {"argmin", rep.argmin},
                {"verdict", rep.verdict == ScanReport::Verdict::NoRootFound
                                ? "no_root_found"
                                : "sign_change_found"}};
}

json theorem4_json(const Theorem4Report& rep) {
    json surjective = json::array();
    for (bool b : rep.surjective) surjective.push_back(b);
    return json{{"char_norm", rep.char_norm},
                {"char_zero", rep.char_zero},
                {"scan", scan_json(rep.scan)},
                {"p_nonvanishing", rep.p_nonvanishing},
                {"frame_independent", rep.frame_li},
                {"projection_residuals", rep.projection_residuals},
                {"projections_zero", rep.projections_zero},
                {"surjective", surjective},
                {"surjective_all", rep.surjective_all},
                {"hypotheses_hold", rep.hypotheses_hold},
                {"conclusion_holds", rep.conclusion_holds}};
}

json schema_json() {
    json s;
    s["complex"] = {{"description", "complex scalar; object form is emitted, all forms accepted"},
                    {"forms", {{{"re", 1.0}, {"im", 2.0}}, {1.0, 2.0}, 1.0}}};
    s["algebra"] = {
        {"description",
         "m idempotents, n total basis vectors; upsilon lists the coefficient of I_p in "
         "I_r*I_s for nilpotent r,s; u_map sends each nilpotent index to its idempotent"},
        {"example",
         {{"m", 1},
          {"n", 3},
          {"upsilon", {{{"r", 2}, {"s", 2}, {"p", 3}, {"re", 1.0}, {"im", 0.0}}}},
          {"u_map", {{"2", 1}, {"3", 1}}}}}};
    s["frame"] = {{"description",
                   "k-1 spanning vectors beyond the implicit unit e_1, each a row of n "
                   "complex coefficients"},
                  {"example", {{"k", 3}, {"vectors", {{{0.0, 1.0}, {0.0, 0.0}},
                                                      {{0.0, 0.0}, {0.0, 1.0}}}}}}};
    s["function"] = {
        {"description",
         "one holomorphic component per basis slot: F (size m) and G (size n-m); each "
         "component is a sum of terms poly(z)*exp(lambda z), poly ascending"},
        {"example",
         {{"F", {{{"terms",
                   {{{"poly", {{0.0, 0.0}, {1.0, 0.0}}}, {"exp_lambda", nullptr}}}}}}},
          {"G", json::array()}}}};
    s["pde"] = {{"description",
                 "constant-coefficient operator of total order N; alpha orders are per "
                 "coordinate x_1..x_k"},
                {"example",
                 {{"N", 2},
                  {"terms", {{{"alpha", {2, 0, 0}}, {"c", 1.0}},
                             {{"alpha", {0, 2, 0}}, {"c", 1.0}},
                             {{"alpha", {0, 0, 2}}, {"c", 1.0}}}}}}};
    s["element"] = {{"description", "coefficient vector over the basis"},
                    {"example", {{"coeffs", {{{"re", 2.0}, {"im", 0.0}},
                                             {{"re", 3.0}, {"im", 0.0}}}}}}};
    s["point"] = {{"description", "real coordinates x_1..x_k"}, {"example", {0.0, 1.0, 0.0}}};
    s["grid"] = {{"description", "tensor grid of points"},
                 {"example",
                  {{"axes", {{{"min", -1.0}, {"max", 1.0}, {"count", 5}},
                             {{"min", 0.0}, {"max", 2.0}, {"count", 3}}}}}}};
    s["box"] = {{"description", "per-direction intervals for the coefficient scan"},
                {"example", {{-10.0, 10.0}, {-10.0, 10.0}}}};
    return s;
}

} // namespace monogen::io
