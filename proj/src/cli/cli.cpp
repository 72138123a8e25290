#include <wittkit/cli.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <regex>

#include <wittkit/count.hpp>
#include <wittkit/error.hpp>
#include <wittkit/parse.hpp>

#include "jsonio.hpp"

namespace wittkit::cli
{

namespace
{

class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

json envelope(const std::string &command)
{
    json j;
    j["schema"] = 1;
    j["command"] = command;
    return j;
}

void emit(std::ostream &out, const json &j, const Config &cfg)
{
    if (cfg.format == "text" && j.contains("result")) {
        out << j.at("result").dump() << "\n";
    } else {
        out << j.dump() << "\n";
    }
}

void need_args(const std::vector<std::string> &args, std::size_t n, const std::string &usage)
{
    if (args.size() != n) throw UsageError("expected " + std::to_string(n) + " argument(s): " + usage);
}

unsigned small_index(const std::string &s, const char *what)
{
    try {
        std::size_t used = 0;
        const long v = std::stol(s, &used);
        if (used != s.size() || v < 1 || v > 100000) throw UsageError("");
        return static_cast<unsigned>(v);
    } catch (const std::exception &) {
        throw UsageError(std::string(what) + " must be a positive integer, got '" + s + "'");
    }
}

CountOptions count_options(const Config &cfg)
{
    CountOptions opt;
    if (cfg.budget) opt.budget = cfg.budget;
    opt.threads = cfg.threads;
    return opt;
}

// ---------------------------------------------------------------------------
// witt

struct WittCmd {
    std::string op;
    std::string ring;
    std::size_t len = 0;
    std::vector<std::string> args;
};

WittVector witt_arg(const Ring &R, const std::string &text, std::size_t len)
{
    std::vector<Elem> c = elems_from_text(R, text);
    if (c.empty()) throw DomainError("Witt vectors need at least one component");
    if (len && c.size() != len) throw DomainError("expected " + std::to_string(len) + " components, got " + std::to_string(c.size()));
    return WittVector(R, std::move(c));
}

int run_witt(const WittCmd &c, const Config &cfg, std::ostream &out)
{
    const Ring R = parse_ring(c.ring);
    json j = envelope("witt " + c.op);
    j["ring"] = R.spec();
    const auto &a = c.args;
    json result;
    if (c.op == "add" || c.op == "sub" || c.op == "mul") {
        need_args(a, 2, "witt " + c.op + " U V");
        const WittVector u = witt_arg(R, a[0], c.len), v = witt_arg(R, a[1], c.len ? c.len : u.length());
        result = to_json(c.op == "add" ? witt_add(u, v) : c.op == "sub" ? witt_sub(u, v) : witt_mul(u, v));
    } else if (c.op == "frob" || c.op == "versch") {
        need_args(a, 2, "witt " + c.op + " N W");
        const unsigned n = small_index(a[0], "N");
        const WittVector w = witt_arg(R, a[1], c.len);
        j["n"] = n;
        result = to_json(c.op == "frob" ? frobenius(n, w) : verschiebung(n, w));
    } else if (c.op == "restrict") {
        need_args(a, 2, "witt restrict M W");
        result = to_json(restrict_to(witt_arg(R, a[1], c.len), small_index(a[0], "M")));
    } else if (c.op == "teich") {
        need_args(a, 1, "witt teich A --len m");
        if (!c.len) throw UsageError("witt teich needs --len");
        result = to_json(teichmueller(parse_elem(R, a[0]), c.len));
    } else if (c.op == "ghost") {
        need_args(a, 1, "witt ghost W");
        result = to_json(ghost(witt_arg(R, a[0], c.len)));
    } else if (c.op == "fromghost") {
        need_args(a, 1, "witt fromghost G");
        result = to_json(from_ghost(R, elems_from_text(R, a[0])));
    } else if (c.op == "series") {
        need_args(a, 1, "witt series W");
        result = to_json(to_one_unit(witt_arg(R, a[0], c.len)).coeffs());
    } else if (c.op == "fromseries") {
        need_args(a, 1, "witt fromseries [1,c1,...,cm]");
        std::vector<Elem> coeffs = elems_from_text(R, a[0]);
        if (coeffs.size() < 2) throw DomainError("a 1-unit needs at least the coefficients 1, c1");
        result = to_json(from_one_unit(TruncSeries(R, std::move(coeffs))));
    } else {
        throw UsageError("unknown witt operation '" + c.op + "'");
    }
    j["result"] = result;
    emit(out, j, cfg);
    return 0;
}

// ---------------------------------------------------------------------------
// ptypical

struct PTypCmd {
    std::string op;
    std::string ring;
    std::uint64_t p = 2;
    std::size_t len = 0;
    std::vector<std::string> args;
};

json split_json(const PTypicalSplit &parts)
{
    json arr = json::array();
    for (const auto &[jj, y] : parts) {
        arr.push_back(json{{"j", jj}, {"level", y.level()}, {"components", to_json(y.components())}});
    }
    return arr;
}

int run_ptypical(const PTypCmd &c, const Config &cfg, std::ostream &out)
{
    if (!is_prime(c.p)) throw DomainError("--p must be prime, got " + std::to_string(c.p));
    json j = envelope("ptypical " + c.op);
    j["p"] = c.p;
    if (c.op == "artinhasse") {
        if (!c.len) throw UsageError("ptypical artinhasse needs --len");
        need_args(c.args, 0, "ptypical artinhasse --p P --len m");
        const ArtinHasseTrunc f = artin_hasse(c.p, c.len);
        j["len"] = c.len;
        j["result"] = to_json(f.series.coeffs());
    } else if (c.op == "epsilon") {
        if (!c.len) throw UsageError("ptypical epsilon needs --len");
        need_args(c.args, 0, "ptypical epsilon --p P --len m --ring R");
        const Ring R = parse_ring(c.ring);
        j["ring"] = R.spec();
        j["result"] = to_json(epsilon(c.p, c.len, R));
    } else if (c.op == "split") {
        need_args(c.args, 1, "ptypical split W");
        const Ring R = parse_ring(c.ring);
        j["ring"] = R.spec();
        j["result"] = split_json(p_typical_split(witt_arg(R, c.args[0], c.len), c.p));
    } else if (c.op == "join") {
        need_args(c.args, 1, "ptypical join '{\"1\": [...], \"3\": [...]}'");
        const Ring R = parse_ring(c.ring);
        j["ring"] = R.spec();
        json in;
        try {
            in = json::parse(c.args[0]);
        } catch (const json::parse_error &e) {
            throw ParseError(std::string("bad JSON: ") + e.what());
        }
        if (!in.is_object()) throw ParseError("ptypical join expects an object mapping j to components");
        PTypicalSplit parts;
        for (const auto &[key, val] : in.items()) {
            const std::uint64_t jj = small_index(key, "j");
            parts.emplace(jj, PTypicalWitt(c.p, R, elems_from_json(R, val)));
        }
        const WittVector w = p_typical_join(parts, c.p);
        if (c.len && w.length() != c.len) throw DomainError("joined length " + std::to_string(w.length()) + " differs from --len");
        j["result"] = to_json(w);
    } else {
        throw UsageError("unknown ptypical operation '" + c.op + "'");
    }
    emit(out, j, cfg);
    return 0;
}

// ---------------------------------------------------------------------------
// cycle

struct CycleCmd {
    std::string op;
    std::string field;
    std::string curve;
    std::string func;
    std::string param;
    unsigned modulus = 0;
};

int run_cycle(const CycleCmd &c, const Config &cfg, std::ostream &out)
{
    json j = envelope("cycle " + c.op);
    if (c.op == "divisor") {
        if (c.func.empty()) throw UsageError("cycle divisor needs --func");
        const Ring k = parse_ring(c.field.empty() ? cfg.field : c.field);
        const std::string param = c.param.empty() ? default_param(k) : c.param;
        const Elem h = parse_elem(param_field(k, param), c.func);
        json arr = json::array();
        for (const auto &[P, mult] : divisor_on_P1(h)) arr.push_back(json{{"point", to_json(P, param)}, {"mult", mult}});
        j["field"] = k.spec();
        j["result"] = arr;
        emit(out, j, cfg);
        return 0;
    }
    if (c.curve.empty()) throw UsageError("cycle " + c.op + " needs --curve");
    const ParamCurve C = curve_from_json(load_json_arg(c.curve), c.field);
    j["curve"] = C.to_string();
    int code = 0;
    if (c.op == "faces") {
        json arr = json::array();
        for (const auto &F : faces(C)) {
            arr.push_back(json{{"index", F.index}, {"at", F.at_infinity ? "inf" : "0"}, {"cycle", to_json(F.cycle)}});
        }
        j["result"] = arr;
    } else if (c.op == "boundary") {
        j["result"] = to_json(boundary(C));
    } else if (c.op == "modulus") {
        const unsigned m = c.modulus ? c.modulus : C.modulus();
        const ModulusCheck mc = check_modulus(C, m);
        const std::string param = C.function_field().variables().back();
        json r{{"modulus", m}, {"ok", mc.ok}};
        if (mc.witness) {
            r["witness"] = to_json(*mc.witness, param);
            r["lhs"] = mc.lhs;
            r["rhs"] = mc.rhs;
        }
        j["result"] = r;
        code = mc.ok ? 0 : 3;
    } else {
        throw UsageError("unknown cycle operation '" + c.op + "'");
    }
    emit(out, j, cfg);
    return code;
}

// ---------------------------------------------------------------------------
// forms

struct FormsCmd {
    std::string op;
    std::string field;
    std::string cycle;
    std::string form;
    unsigned modulus = 2;
    std::vector<std::string> args;
};

int run_forms(const FormsCmd &c, const Config &cfg, std::ostream &out)
{
    json j = envelope("forms " + c.op);
    const std::string spec = c.field.empty() ? std::string() : c.field;
    if (c.op == "eval") {
        if (c.cycle.empty()) throw UsageError("forms eval needs --cycle");
        if (c.modulus < 2) throw DomainError("--modulus must be at least 2");
        const ZeroCycle z = cycle_from_json(load_json_arg(c.cycle), spec);
        j["field"] = z.base().spec();
        j["modulus"] = c.modulus;
        j["cycle"] = to_json(z);
        json r;
        if (c.modulus == 2) r["form"] = to_json(eval_cycle_mod2(z));
        if (z.dim() == 1) {
            r["witt"] = to_json(eval_cycle_general(z, c.modulus));
        } else if (c.modulus > 2) {
            throw DomainError("Witt-valued evaluation is only available for cycles with one coordinate");
        }
        j["result"] = r;
    } else if (c.op == "reciprocity") {
        if (c.form.empty()) throw UsageError("forms reciprocity needs --form \"h ds\"");
        const Ring k = parse_ring(spec.empty() ? cfg.field : spec);
        const std::string param = default_param(k);
        static const std::regex tail(R"(^(.*?)\s*\*?\s*d([A-Za-z_][A-Za-z0-9_]*)\s*$)");
        std::smatch mt;
        if (!std::regex_match(c.form, mt, tail) || mt[2] != param) {
            throw ParseError("expected a form 'h(" + param + ") d" + param + "', got '" + c.form + "'");
        }
        const std::string h_text = std::string(mt[1]).empty() ? "1" : std::string(mt[1]);
        const RationalOneForm w{parse_elem(param_field(k, param), h_text)};
        json arr = json::array();
        Elem sum = k.zero();
        for (const auto &[P, r] : residues(w)) {
            arr.push_back(json{{"point", to_json(P, param)}, {"residue", to_json(r)}});
            sum += r;
        }
        j["field"] = k.spec();
        j["form"] = w.to_string();
        j["result"] = json{{"residues", arr}, {"sum", to_json(sum)}, {"pass", sum.is_zero()}};
        emit(out, j, cfg);
        return sum.is_zero() ? 0 : 3;
    } else if (c.op == "dlog") {
        if (c.args.empty()) throw UsageError("forms dlog needs at least one symbol entry");
        const Ring k = parse_ring(spec.empty() ? cfg.field : spec);
        std::vector<Elem> sym;
        for (const auto &s : c.args) sym.push_back(parse_elem(k, s));
        const MilnorImage im = milnor_dlog(sym);
        const DiffForm ev = eval_cycle_mod2(im.cycle);
        j["field"] = k.spec();
        j["result"] = json{{"cycle", to_json(im.cycle)}, {"form", to_json(im.form)}, {"eval", to_json(ev)}, {"agree", ev == im.form}};
        emit(out, j, cfg);
        return ev == im.form ? 0 : 3;
    } else {
        throw UsageError("unknown forms operation '" + c.op + "'");
    }
    emit(out, j, cfg);
    return 0;
}

// ---------------------------------------------------------------------------
// count

struct CountCmd {
    std::string field;
    std::size_t projective = 0;
    std::size_t affine = 0;
    bool has_projective = false;
    bool has_affine = false;
    std::vector<std::string> polys;
    std::string vars;
    unsigned tower = 1;
    bool axkatz = false;
    int kappa = -1;
    bool smooth = false;
    std::vector<long> elliptic;
};

int run_count(const CountCmd &c, const Config &cfg, std::ostream &out)
{
    if (c.field.empty()) throw UsageError("count needs --field");
    if (c.tower < 1) throw UsageError("--tower must be at least 1");
    const Ring k = parse_ring(c.field);
    if (!k.is_finite_field()) throw DomainError("count needs a finite field, got " + k.spec());
    const CountOptions opt = count_options(cfg);
    json j = envelope("count");
    j["field"] = k.spec();
    j["q"] = to_json(k.order());

    if (!c.elliptic.empty()) {
        if (c.elliptic.size() != 2) throw UsageError("--elliptic takes the two coefficients A B");
        if (k.ext_degree() != 1) throw DomainError("elliptic Frobenius data needs a prime field");
        const EllipticReport r = elliptic_frobenius(c.elliptic[0], c.elliptic[1], k.char_p(), c.tower, opt);
        json pred = json::array();
        for (const auto &v : r.predicted) pred.push_back(to_json(v));
        j["ambient"] = "P^2";
        j["result"]["N"] = r.enumerated;
        j["result"]["elliptic"] = json{{"a", c.elliptic[0]}, {"b", c.elliptic[1]}, {"a_p", r.a_p}, {"predicted", pred}, {"hasse", r.hasse}, {"tower_matches", r.tower_matches}};
        emit(out, j, cfg);
        return r.hasse && r.tower_matches ? 0 : 3;
    }

    if (c.has_projective == c.has_affine) throw UsageError("count needs exactly one of --projective N, --affine N");
    VarietySpec X{k, c.has_projective, c.has_projective ? c.projective : c.affine, {}};
    std::vector<std::string> names = default_coordinate_names(X.nvars());
    if (!c.vars.empty()) {
        names.clear();
        std::stringstream ss(c.vars);
        std::string v;
        while (std::getline(ss, v, ',')) names.push_back(v);
        if (names.size() != X.nvars()) throw UsageError("--vars lists " + std::to_string(names.size()) + " names for " + std::to_string(X.nvars()) + " coordinates");
    }
    for (const auto &p : c.polys) X.polys.push_back(parse_poly(k, p, names));
    X.validate();

    j["ambient"] = std::string(X.projective ? "P^" : "A^") + std::to_string(X.n);
    json polys = json::array();
    for (const auto &f : X.polys) polys.push_back(f.to_string(names));
    j["polys"] = polys;
    const CountReport rep = count_tower(X, c.tower, opt);
    j["result"]["N"] = rep.N;

    bool ok = true;
    json verdicts = json::array();
    if (c.axkatz || c.kappa >= 0) {
        std::optional<unsigned> kappa;
        if (c.kappa >= 0) kappa = static_cast<unsigned>(c.kappa);
        const CongruenceVerdict v = check_congruence(X, kappa, opt);
        json vj{{"kind", "ax-katz"}, {"kappa", v.kappa}, {"modulus", to_json(v.modulus)}, {"count", v.count}, {"lhs", to_json(v.lhs)}, {"rhs", to_json(v.rhs)}, {"pass", v.pass}};
        if (v.ax_case) vj["ax"] = json{{"pass", v.ax_pass}};
        verdicts.push_back(vj);
        ok = ok && v.pass && v.ax_pass;
    }
    if (c.smooth) {
        const bool s1 = jacobian_smooth(X, 1, opt), s2 = jacobian_smooth(X, 2, opt);
        verdicts.push_back(json{{"kind", "jacobian-smooth"}, {"over_q", s1}, {"over_q2", s2}, {"pass", s1 && s2}});
        ok = ok && s1 && s2;
    }
    if (!verdicts.empty()) j["result"]["verdicts"] = verdicts;
    emit(out, j, cfg);
    return ok ? 0 : 3;
}

// ---------------------------------------------------------------------------
// corpus

struct CorpusCmd {
    std::string op;
    std::string suite = "all";
    bool verbose = false;
};

int run_corpus(const CorpusCmd &c, const Config &cfg, std::ostream &out)
{
    json j = envelope("corpus " + c.op);
    if (c.op == "list") {
        j["result"] = corpus_suites();
        emit(out, j, cfg);
        return 0;
    }
    if (c.op != "run") throw UsageError("unknown corpus operation '" + c.op + "'");
    std::vector<std::string> names;
    if (c.suite == "all") {
        names = corpus_suites();
    } else {
        const auto &all = corpus_suites();
        if (std::find(all.begin(), all.end(), c.suite) == all.end()) throw UsageError("unknown suite '" + c.suite + "'");
        names.push_back(c.suite);
    }
    std::vector<std::future<SuiteResult>> jobs;
    for (const auto &n : names) {
        const std::uint64_t s = suite_seed(cfg.seed, n);
        jobs.push_back(std::async(std::launch::async, [n, s] { return run_suite(n, s); }));
    }
    std::vector<SuiteResult> results;
    for (auto &f : jobs) results.push_back(f.get());

    json suites = json::array();
    std::size_t total = 0, passed = 0;
    for (const auto &r : results) {
        json fails = json::array(), cases = json::array();
        std::size_t ok = 0;
        for (const auto &cr : r.cases) {
            ok += cr.pass;
            if (!cr.pass) fails.push_back(json{{"case", cr.name}, {"detail", cr.detail}});
            if (c.verbose) cases.push_back(json{{"case", cr.name}, {"pass", cr.pass}});
        }
        json sj{{"name", r.name}, {"seed", r.seed}, {"cases", r.cases.size()}, {"passed", ok}, {"failures", fails}};
        if (c.verbose) sj["results"] = cases;
        suites.push_back(sj);
        total += r.cases.size();
        passed += ok;
        if (!cfg.corpus_dir.empty()) {
            std::filesystem::create_directories(cfg.corpus_dir);
            std::ofstream f(std::filesystem::path(cfg.corpus_dir) / (r.name + ".json"));
            json full{{"schema", 1}, {"suite", r.name}, {"seed", r.seed}, {"cases", json::array()}};
            for (const auto &cr : r.cases) full["cases"].push_back(json{{"case", cr.name}, {"pass", cr.pass}, {"detail", cr.detail}});
            f << full.dump(2) << "\n";
        }
    }
    j["seed"] = cfg.seed;
    j["result"] = json{{"suites", suites}, {"total", total}, {"passed", passed}, {"ok", passed == total}};
    if (cfg.format == "text") {
        for (const auto &r : results) {
            std::size_t ok = 0;
            for (const auto &cr : r.cases) ok += cr.pass;
            out << (ok == r.cases.size() ? "PASS " : "FAIL ") << r.name << " " << ok << "/" << r.cases.size() << "\n";
            for (const auto &cr : r.cases) {
                if (!cr.pass) out << "  FAIL " << cr.name << (cr.detail.empty() ? "" : ": " + cr.detail) << "\n";
                else if (c.verbose) out << "  pass " << cr.name << "\n";
            }
        }
        out << "total " << passed << "/" << total << "\n";
    } else {
        emit(out, j, cfg);
    }
    return passed == total ? 0 : 3;
}

std::string chosen(const CLI::App *parent) { return parent->get_subcommands().front()->get_name(); }

} // namespace

std::uint64_t suite_seed(std::uint64_t seed, const std::string &suite)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : suite) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h ^ (seed * 0x9E3779B97F4A7C15ULL);
}

int dispatch(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    Config cfg;
    CLI::App app{"Exact big Witt vector algebra, additive 0-cycles, differential forms and point counting", "wittkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", cfg.seed, "Seed for corpus generation");
    app.add_option("--budget", cfg.budget, "Enumeration budget (point evaluations); also WITTKIT_BUDGET");
    app.add_option("--threads", cfg.threads, "Worker threads for enumeration (0: all cores)");
    app.add_option("--corpus-dir", cfg.corpus_dir, "Directory receiving per-suite corpus reports");

    // Sibling subcommands get separate storage; CLI11 resets bound variables
    // of subcommands that were not invoked.
    std::map<std::string, WittCmd> wcs;
    auto *witt = app.add_subcommand("witt", "Big Witt vector arithmetic");
    witt->require_subcommand(1);
    for (const char *op : {"add", "sub", "mul", "frob", "versch", "restrict", "teich", "ghost", "fromghost", "series", "fromseries"}) {
        WittCmd &wc = wcs[op];
        wc.op = op;
        wc.ring = "Q";
        auto *s = witt->add_subcommand(op, std::string("witt ") + op);
        s->add_option("--ring", wc.ring, "Coefficient ring");
        s->add_option("--len", wc.len, "Length m");
        s->add_option("args", wc.args, "Operands (JSON arrays, N, A)");
    }

    std::map<std::string, PTypCmd> pcs;
    auto *ptyp = app.add_subcommand("ptypical", "Artin-Hasse series and the p-typical decomposition");
    ptyp->require_subcommand(1);
    for (const char *op : {"split", "join", "artinhasse", "epsilon"}) {
        PTypCmd &pc = pcs[op];
        pc.op = op;
        pc.ring = "Q";
        auto *s = ptyp->add_subcommand(op, std::string("ptypical ") + op);
        s->add_option("--p", pc.p, "Prime")->required();
        s->add_option("--len", pc.len, "Length m");
        s->add_option("--ring", pc.ring, "Coefficient ring");
        s->add_option("args", pc.args, "Operand");
    }

    std::map<std::string, CycleCmd> ccs;
    auto *cyc = app.add_subcommand("cycle", "Divisors, faces, boundaries and the modulus condition");
    cyc->require_subcommand(1);
    for (const char *op : {"divisor", "faces", "boundary", "modulus"}) {
        CycleCmd &cc = ccs[op];
        cc.op = op;
        auto *s = cyc->add_subcommand(op, std::string("cycle ") + op);
        s->add_option("--field", cc.field, "Base field (overrides the curve file)");
        s->add_option("--curve", cc.curve, "Curve JSON file or inline JSON");
        s->add_option("--func", cc.func, "Rational function (divisor)");
        s->add_option("--param", cc.param, "Parameter name (divisor)");
        s->add_option("--modulus", cc.modulus, "Modulus m (modulus)");
    }

    std::map<std::string, FormsCmd> fcs;
    auto *frm = app.add_subcommand("forms", "Evaluation maps, residues and dlog");
    frm->require_subcommand(1);
    for (const char *op : {"eval", "reciprocity", "dlog"}) {
        FormsCmd &fc = fcs[op];
        fc.op = op;
        auto *s = frm->add_subcommand(op, std::string("forms ") + op);
        s->add_option("--field", fc.field, "Base field");
        s->add_option("--modulus", fc.modulus, "Modulus m (eval)");
        s->add_option("--cycle", fc.cycle, "Cycle JSON file or inline JSON (eval)");
        s->add_option("--form", fc.form, "Rational 1-form 'h(s) ds' (reciprocity)");
        s->add_option("args", fc.args, "Symbol entries (dlog)");
    }

    CountCmd nc;
    auto *cnt = app.add_subcommand("count", "Point counts over finite fields and congruence checks");
    cnt->add_option("--field", nc.field, "Finite field, e.g. F3 or F3^2");
    cnt->add_option("--projective", nc.projective, "Projective space P^N")->each([&nc](const std::string &) { nc.has_projective = true; });
    cnt->add_option("--affine", nc.affine, "Affine space A^N")->each([&nc](const std::string &) { nc.has_affine = true; });
    cnt->add_option("--poly", nc.polys, "Defining polynomial (repeatable)");
    cnt->add_option("--vars", nc.vars, "Comma separated coordinate names");
    cnt->add_option("--tower", nc.tower, "Count over F_{q^s} for s = 1..S");
    cnt->add_flag("--axkatz", nc.axkatz, "Check the Ax-Katz congruence");
    cnt->add_option("--kappa", nc.kappa, "Congruence level override");
    cnt->add_flag("--smooth", nc.smooth, "Jacobian smoothness over F_q and F_{q^2}");
    cnt->add_option("--elliptic", nc.elliptic, "y^2 = x^3 + A x + B over F_p")->expected(2);

    std::map<std::string, CorpusCmd> kcs;
    auto *cor = app.add_subcommand("corpus", "Reproducible example and property corpus");
    cor->require_subcommand(1);
    for (const char *op : {"run", "list"}) {
        CorpusCmd &kc = kcs[op];
        kc.op = op;
        auto *s = cor->add_subcommand(op, std::string("corpus ") + op);
        s->add_option("--suite", kc.suite, "Suite name or all");
        s->add_flag("--verbose", kc.verbose, "List every case");
    }

    // CLI11 splits "[a,b]" tokens into separate values; a leading space
    // keeps JSON arrays intact.
    std::vector<std::string> tokens;
    for (int i = argc - 1; i >= 1; --i) {
        std::string t = argv[i];
        if (!t.empty() && t.front() == '[') t.insert(t.begin(), ' ');
        tokens.push_back(std::move(t));
    }

    try {
        app.parse(tokens);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (witt->parsed()) return run_witt(wcs.at(chosen(witt)), cfg, out);
        if (ptyp->parsed()) return run_ptypical(pcs.at(chosen(ptyp)), cfg, out);
        if (cyc->parsed()) return run_cycle(ccs.at(chosen(cyc)), cfg, out);
        if (frm->parsed()) return run_forms(fcs.at(chosen(frm)), cfg, out);
        if (cnt->parsed()) return run_count(nc, cfg, out);
        if (cor->parsed()) return run_corpus(kcs.at(chosen(cor)), cfg, out);
    } catch (const UsageError &e) {
        err << "wittkit: " << e.what() << "\n";
        return 2;
    } catch (const GoodPositionError &e) {
        err << "wittkit: good position fails on face " << e.face_index() << (e.face_at_infinity() ? " (inf)" : " (0)") << ": " << e.what() << "\n";
        return 1;
    } catch (const Error &e) {
        err << "wittkit: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception &e) {
        err << "wittkit: bad JSON input: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    std::vector<const char *> argv{"wittkit"};
    for (const auto &a : args) argv.push_back(a.c_str());
    return dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace wittkit::cli
