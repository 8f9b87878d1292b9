/* Copyright 2026 The liegeo Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "liegeo/free_lie.hpp"
#include "liegeo/geometry.hpp"
#include "liegeo/logic.hpp"
#include "liegeo/metabelian.hpp"
#include "liegeo/reduction.hpp"
#include "liegeo/terms.hpp"

namespace liegeo::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path + ": cannot open file");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Replace (or add) field= on the algebra line.
std::string override_field(const std::string& text, const std::string& field) {
    std::istringstream in(text);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        size_t k = line.find_first_not_of(" \t");
        if (k != std::string::npos && line.compare(k, 7, "algebra") == 0) {
            size_t f = line.find("field=");
            if (f == std::string::npos) {
                line += " field=" + field;
            } else {
                size_t e = line.find_first_of(" \t#", f);
                line = line.substr(0, f) + "field=" + field + (e == std::string::npos ? "" : line.substr(e));
            }
        }
        out << line << "\n";
    }
    return out.str();
}

std::string field_spec(const std::string& text) {
    try {
        return Field::parse(text).str();
    } catch (const Error& e) {
        throw InputError("--field " + text + ": " + e.what());
    }
}

EquationSystem load_system(const RunConfig& cfg, const std::string& path) {
    std::string text = read_file(path);
    if (cfg.field) text = override_field(text, field_spec(*cfg.field));
    try {
        return parse_system(text);
    } catch (const SyntaxError& e) {
        throw InputError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.col()) + ": expected " +
                         e.expected());
    } catch (const Error& e) {
        throw InputError(path + ": " + e.what());
    }
}

const std::string& single_system(const RunConfig& cfg) {
    if (cfg.systems.size() != 1) throw InputError(cfg.command + ": exactly one --system file expected");
    return cfg.systems[0];
}

int resolve_trunc(const RunConfig& cfg, const EquationSystem& sys) {
    if (cfg.trunc) return *cfg.trunc;
    if (sys.carrier && sys.carrier->trunc) return *sys.carrier->trunc;
    return kDefaultTrunc;
}

Json header(const RunConfig& cfg) {
    Json r;
    r["spec"] = kReportSchema;
    r["command"] = cfg.command;
    return r;
}

void describe_system(Json& r, const std::string& path, const EquationSystem& sys) {
    r["system"] = path;
    r["algebra"] = sys.algebra.str();
    r["vars"] = sys.vars;
    r["equations"] = sys.equations.size();
}

std::string render_tuple(const Field& k, const std::vector<Scalar>& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + k.render(t[i]);
    return s + ")";
}

std::string render_polytope_point(const Parallelepipedon& p, const Point& pt) {
    std::string s = "(";
    for (size_t i = 0; i < pt.size(); ++i) s += (i ? ", " : "") + p.algebra().render(pt[i]);
    return s + ")";
}

Json polytope_points(const Parallelepipedon& p, const PointSet& tuples) {
    Json out = Json::array();
    for (uint64_t i : tuples) {
        auto t = p.tuple(i);
        Json e;
        e["coordinates"] = render_tuple(p.field(), t);
        e["point"] = render_polytope_point(p, p.point(t));
        out.push_back(std::move(e));
    }
    return out;
}

Json window_points(const Ambient& amb, const PointSet& pts) {
    Json out = Json::array();
    for (uint64_t i : pts) out.push_back(amb.render_point(i));
    return out;
}

struct WindowSolve {
    AmbientPtr ambient;
    AlgebraicSet set;
};

WindowSolve solve_window(const RunConfig& cfg, const EquationSystem& sys, Json& r) {
    const int trunc = resolve_trunc(cfg, sys);
    auto carrier = default_carrier(sys);
    auto amb = Ambient::make(sys, carrier, trunc);
    r["regime"] = regime_name(Regime::Window);
    r["carrier"] = carrier->description();
    r["trunc"] = trunc;
    r["window_size"] = amb->window().size();
    r["points_searched"] = amb->size();
    r["budget"] = cfg.budget;
    auto y = solve(sys, amb, cfg.budget);
    r["count"] = y.size();
    return {amb, std::move(y)};
}

CommandOutput cmd_solve(const RunConfig& cfg) {
    Json r = header(cfg);
    const auto& path = single_system(cfg);
    auto sys = load_system(cfg, path);
    describe_system(r, path, sys);
    if (!sys.polytope.empty()) {
        auto p = Parallelepipedon::from_system(sys);
        r["regime"] = regime_name(Regime::Polytope);
        r["polytope"] = p.str();
        r["coordinates"] = p.total_dim();
        r["points_searched"] = p.size();
        r["budget"] = cfg.budget;
        auto sols = solve_in_polytope(sys.equations, sys.field(), p, cfg.budget);
        r["count"] = sols.size();
        r["points"] = polytope_points(p, sols);
        return {std::move(r), ""};
    }
    auto w = solve_window(cfg, sys, r);
    r["points"] = window_points(*w.ambient, w.set.points);
    return {std::move(r), ""};
}

CommandOutput cmd_radical(const RunConfig& cfg) {
    Json r = header(cfg);
    const auto& path = single_system(cfg);
    auto sys = load_system(cfg, path);
    describe_system(r, path, sys);
    auto w = solve_window(cfg, sys, r);
    const int bound = cfg.bound.value_or(kDefaultRadicalBound);
    auto rad = radical(w.set, bound);
    r["bound"] = bound;
    r["monomials"] = rad.monomials.size();
    r["dimension"] = rad.dimension();
    Json basis = Json::array();
    for (const auto& e : rad.elements()) basis.push_back(w.ambient->ax().render(e));
    r["basis"] = std::move(basis);
    return {std::move(r), ""};
}

CommandOutput cmd_decompose(const RunConfig& cfg) {
    Json r = header(cfg);
    const auto& path = single_system(cfg);
    auto sys = load_system(cfg, path);
    describe_system(r, path, sys);
    auto w = solve_window(cfg, sys, r);
    const int bound = cfg.bound.value_or(kDefaultRadicalBound);
    r["bound"] = bound;
    r["max_points"] = kDefaultDecomposeBound;
    auto comps = decompose(w.set, bound);
    std::sort(comps.begin(), comps.end());
    Json out = Json::array();
    for (const auto& c : comps) out.push_back(window_points(*w.ambient, c));
    r["components"] = std::move(out);
    return {std::move(r), ""};
}

void verify_section(Json& r, const Parallelepipedon& p, const PointSet& vk, const PointSet& vf) {
    Json v;
    v["points_searched"] = p.size();
    v["polynomial_solutions"] = vk.size();
    v["lie_solutions"] = vf.size();
    v["agree"] = vk == vf;
    r["verification"] = std::move(v);
}

CommandOutput cmd_reduce(const RunConfig& cfg) {
    Json r = header(cfg);
    const auto& path = single_system(cfg);
    auto sys = load_system(cfg, path);
    describe_system(r, path, sys);
    auto p = Parallelepipedon::from_system(sys);
    auto s = reduce_system(sys, p);
    r["polytope"] = p.str();
    r["polynomials"] = s.polys.size();
    r["exchange"] = s.render();
    if (p.field().is_finite()) {
        r["budget"] = cfg.budget;
        verify_section(r, p, solve_poly_system(s, p, cfg.budget),
                       solve_in_polytope(sys.equations, sys.field(), p, cfg.budget));
    }
    return {std::move(r), "exchange"};
}

CommandOutput cmd_lift(const RunConfig& cfg) {
    Json r = header(cfg);
    const auto& path = single_system(cfg);
    if (cfg.poly_path.empty()) throw InputError("lift: --poly file expected");
    auto sys = load_system(cfg, path);
    auto p = Parallelepipedon::from_system(sys);
    PolySystem s = [&] {
        try {
            return PolySystem::parse(read_file(cfg.poly_path));
        } catch (const SyntaxError& e) {
            throw InputError(cfg.poly_path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.col()) +
                             ": expected " + e.expected());
        } catch (const Error& e) {
            throw InputError(cfg.poly_path + ": " + e.what());
        }
    }();
    if (s.ring->arity() != p.total_dim() || !(s.ring->coeffs == p.field()))
        throw InputError(cfg.poly_path + ": polynomial system does not match the polytope of " + path);
    auto lifted = lift_system(s, p, sys.vars);
    r["system"] = path;
    r["poly"] = cfg.poly_path;
    r["polytope"] = p.str();
    r["equations"] = lifted.equations.size();
    r["exchange"] = render_system(lifted);
    if (p.field().is_finite()) {
        r["budget"] = cfg.budget;
        verify_section(r, p, solve_poly_system(s, p, cfg.budget),
                       solve_in_polytope(lifted.equations, lifted.field(), p, cfg.budget));
    }
    return {std::move(r), "exchange"};
}

CommandOutput cmd_classify(const RunConfig& cfg) {
    Json r = header(cfg);
    const auto& path = single_system(cfg);
    auto sys = load_system(cfg, path);
    describe_system(r, path, sys);
    const int degree = cfg.bound.value_or(kDefaultSearchDegree);
    r["search_degree"] = degree;
    r["budget"] = cfg.budget;
    auto c = classify_one_variable(sys, degree, cfg.budget);
    r["kind"] = one_variable_kind_name(c.kind);
    r["solutions"] = c.solutions;
    r["bound"] = c.bound ? Json(c.bound->str()) : Json();
    r["exact"] = c.exact;
    return {std::move(r), ""};
}

std::string carrier_kind(const std::string& k) { return k == "mb" ? "metabelian" : k; }

// kind[:n]
CarrierSpec parse_carrier(const std::string& text, int default_rank) {
    CarrierSpec c;
    auto colon = text.find(':');
    c.kind = carrier_kind(text.substr(0, colon));
    c.rank = default_rank;
    if (colon != std::string::npos) {
        try {
            c.rank = std::stoi(text.substr(colon + 1));
        } catch (const std::exception&) {
            throw InputError("carrier '" + text + "': bad rank");
        }
    }
    static const std::vector<std::string> kinds{"free", "metabelian", "abelian", "heisenberg", "nonqw"};
    if (std::find(kinds.begin(), kinds.end(), c.kind) == kinds.end())
        throw InputError("carrier '" + text + "': expected free, mb, metabelian, abelian, heisenberg or nonqw");
    if (c.rank < 1) throw InputError("carrier '" + text + "': rank must be positive");
    return c;
}

std::string render_witness_tuple(const Carrier& b, const std::vector<Element>& w) {
    std::string s = "(";
    for (size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + b.render(w[i]);
    return s + ")";
}

CommandOutput cmd_axioms(const RunConfig& cfg) {
    Json r = header(cfg);
    AlgebraSpec alg;
    alg.field = Field::parse(field_spec(cfg.field.value_or("GF(2)")));
    auto spec = parse_carrier(cfg.carrier, cfg.rank);
    if (cfg.module) spec.module = cfg.module;
    auto carrier = build_carrier(spec, alg);
    const int trunc = cfg.trunc.value_or(kDefaultAxiomTrunc);
    const int r4 = cfg.phi4_rank.value_or(cfg.rank);
    Window w(carrier, trunc);
    r["carrier"] = carrier->description();
    r["field"] = alg.field.str();
    r["trunc"] = trunc;
    r["window_size"] = w.size();
    r["phi4_rank"] = r4;
    r["budget"] = cfg.budget;
    std::vector<std::string> names;
    for (size_t i = 0; i < carrier->constant_count(); ++i) names.push_back("x" + std::to_string(i + 1));
    auto ring = make_ring(names, alg.field);
    std::vector<Poly> polys;
    for (const auto& a : cfg.actions) {
        try {
            polys.push_back(Poly::parse(ring, a));
        } catch (const Error& e) {
            throw InputError("--action " + a + ": " + e.what());
        }
    }
    Json out = Json::array();
    bool all = true;
    for (const auto& v : phi_suite(w, r4, polys, cfg.budget)) {
        Json e;
        e["axiom"] = v.name;
        e["verdict"] = v.verdict.holds ? "pass" : "fail";
        e["method"] = v.verdict.method;
        e["assignments"] = v.verdict.assignments;
        e["witness"] = v.verdict.witness ? Json(render_witness_tuple(*carrier, *v.verdict.witness)) : Json();
        if (!v.note.empty()) e["note"] = v.note;
        all = all && v.verdict.holds;
        out.push_back(std::move(e));
    }
    r["axioms"] = std::move(out);
    r["all_pass"] = all;
    return {std::move(r), ""};
}

CommandOutput cmd_geoeq(const RunConfig& cfg) {
    Json r = header(cfg);
    if (cfg.systems.empty()) throw InputError("geoeq: at least one --system file expected");
    if (cfg.carrier2.empty()) throw InputError("geoeq: --right carrier expected");
    std::vector<EquationSystem> corpus;
    for (const auto& p : cfg.systems) corpus.push_back(load_system(cfg, p));
    for (const auto& s : corpus)
        if (!(s.algebra.kind == corpus[0].algebra.kind && s.algebra.rank == corpus[0].algebra.rank &&
              s.field() == corpus[0].field()))
            throw InputError("geoeq: every corpus system needs the same coefficient algebra");
    auto b = build_carrier(parse_carrier(cfg.carrier, cfg.rank), corpus[0].algebra);
    auto c = build_carrier(parse_carrier(cfg.carrier2, cfg.rank), corpus[0].algebra);
    const int tb = cfg.trunc.value_or(kDefaultTrunc);
    const int tc = cfg.trunc2.value_or(tb);
    const int bound = cfg.bound.value_or(kDefaultRadicalBound);
    r["left"] = b->description();
    r["left_trunc"] = tb;
    r["right"] = c->description();
    r["right_trunc"] = tc;
    r["bound"] = bound;
    r["budget"] = cfg.budget;
    r["corpus"] = cfg.systems;
    auto res = geo_equiv_probe(b, tb, c, tc, corpus, bound, cfg.budget);
    r["checked"] = res.checked;
    r["equivalent"] = res.equivalent;
    r["first_divergence"] = res.first_divergence ? Json(cfg.systems[*res.first_divergence]) : Json();
    return {std::move(r), ""};
}

CommandOutput cmd_dims(const RunConfig& cfg) {
    Json r = header(cfg);
    const int degree = cfg.bound.value_or(kDefaultDimsDegree);
    const Field field = Field::parse(field_spec(cfg.field.value_or("GF(2)")));
    r["rank"] = cfg.rank;
    r["field"] = field.str();
    r["bound"] = degree;
    Json free_dims = Json::array();
    for (int n = 1; n <= degree; ++n) free_dims.push_back(lyndon_count(cfg.rank, n));
    r["free_lie"] = std::move(free_dims);
    auto mb = MetabelianAlgebra::make(field, cfg.rank);
    Json mb_dims = Json::array();
    size_t below = 0;
    for (int n = 1; n <= degree; ++n) {
        size_t up_to = mb->window_basis(n).size();
        mb_dims.push_back(up_to - below);
        below = up_to;
    }
    r["metabelian"] = std::move(mb_dims);
    std::optional<ModulePresentation> module;
    if (!cfg.systems.empty()) {
        const auto& path = single_system(cfg);
        auto sys = load_system(cfg, path);
        if (!sys.module) throw InputError(path + ": no module statement");
        if (sys.algebra.rank != cfg.rank || !(sys.field() == field))
            throw InputError(path + ": algebra differs from --rank/--field");
        r["system"] = path;
        module = sys.module;
    } else if (cfg.module) {
        module = ModulePresentation::free_module(metabelian_ring(field, cfg.rank), cfg.module);
    }
    if (module) {
        auto handle = build_extension(field, cfg.rank, *module);
        Json m;
        m["module"] = module->str();
        m["module_rank"] = handle.module_rank();
        m["dimension"] = dimension(handle);
        r["coordinate_algebra"] = std::move(m);
    }
    return {std::move(r), ""};
}

}  // namespace

CommandOutput run_command(const RunConfig& cfg) {
    static const std::map<std::string, CommandOutput (*)(const RunConfig&)> table{
        {"solve", cmd_solve},     {"radical", cmd_radical}, {"decompose", cmd_decompose},
        {"reduce", cmd_reduce},   {"lift", cmd_lift},       {"classify1", cmd_classify},
        {"axioms", cmd_axioms},   {"geoeq", cmd_geoeq},     {"dims", cmd_dims},
    };
    auto it = table.find(cfg.command);
    if (it == table.end()) throw InputError("unknown command '" + cfg.command + "'");
    return it->second(cfg);
}

}  // namespace liegeo::cli
