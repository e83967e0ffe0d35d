// Batch front end.  Reads a flat key/value config, runs one pipeline or
// verification command, and writes a deterministic JSON report.
//
// Exit codes: 0 every requested check holds, 1 a check is violated,
// 2 malformed input or a non-generic character point.
//
// Config grammar (one entry per line):
//     key = value            # trailing comments allowed
//     value  := scalar | list
//     scalar := integer | rational p/q | bare word
//     list   := [ value, value, ... ]     (nesting allowed)
//
// All report content is exact: rationals print as "p/q", rational functions
// as polynomial quotients in the character coordinates l1..lr.  Reports
// contain no timestamps and no floating point, so a rerun with the same
// config and seed reproduces the output byte for byte.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dyntwist/hopfcheck.hpp"
#include "dyntwist/intertwine.hpp"
#include "dyntwist/orbit.hpp"
#include "dyntwist/rep.hpp"
#include "dyntwist/rootdata.hpp"
#include "dyntwist/series.hpp"
#include "dyntwist/twist.hpp"
#include "dyntwist/verma.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace dyntwist;

namespace {

// ---------------------------------------------------------------------------
// config file
// ---------------------------------------------------------------------------

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CfgValue {
    bool is_list = false;
    std::string token;            // scalar payload
    std::vector<CfgValue> items;  // list payload
    int line = 0;
};

struct Config {
    std::string path;
    std::string dir;  // directory of the config file, for relative inputs
    std::map<std::string, CfgValue> entries;
    std::map<std::string, int> lines;

    std::string where(const std::string& key) const {
        auto it = lines.find(key);
        std::ostringstream os;
        os << path;
        if (it != lines.end()) os << ":" << it->second;
        os << ": " << key;
        return os.str();
    }
    bool has(const std::string& key) const { return entries.count(key) != 0; }
    const CfgValue& get(const std::string& key) const {
        auto it = entries.find(key);
        if (it == entries.end()) throw ConfigError(path + ": " + key + ": required key is missing");
        return it->second;
    }
};

struct Token {
    enum Kind { Atom, Open, Close, Comma } kind;
    std::string text;
};

std::vector<Token> tokenize(const std::string& s, const std::string& where) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (c == ' ' || c == '\t') {
            ++i;
        } else if (c == '[') {
            out.push_back({Token::Open, "["});
            ++i;
        } else if (c == ']') {
            out.push_back({Token::Close, "]"});
            ++i;
        } else if (c == ',') {
            out.push_back({Token::Comma, ","});
            ++i;
        } else {
            size_t j = i;
            while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '[' && s[j] != ']' && s[j] != ',') ++j;
            out.push_back({Token::Atom, s.substr(i, j - i)});
            i = j;
        }
    }
    if (out.empty()) throw ConfigError(where + ": empty value");
    return out;
}

CfgValue parse_value(const std::vector<Token>& toks, size_t& pos, int line, const std::string& where) {
    if (pos >= toks.size()) throw ConfigError(where + ": value ends unexpectedly");
    const Token& t = toks[pos];
    if (t.kind == Token::Atom) {
        ++pos;
        CfgValue v;
        v.token = t.text;
        v.line = line;
        return v;
    }
    if (t.kind == Token::Open) {
        ++pos;
        CfgValue v;
        v.is_list = true;
        v.line = line;
        if (pos < toks.size() && toks[pos].kind == Token::Close) {
            ++pos;
            return v;
        }
        while (true) {
            v.items.push_back(parse_value(toks, pos, line, where));
            if (pos >= toks.size()) throw ConfigError(where + ": unterminated list");
            if (toks[pos].kind == Token::Comma) {
                ++pos;
                continue;
            }
            if (toks[pos].kind == Token::Close) {
                ++pos;
                return v;
            }
            throw ConfigError(where + ": expected ',' or ']' in list");
        }
    }
    throw ConfigError(where + ": unexpected '" + t.text + "'");
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open config file");
    Config cfg;
    cfg.path = path;
    cfg.dir = fs::path(path).parent_path().string();
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        std::string body = line.substr(a, b - a + 1);
        std::ostringstream osw;
        osw << path << ":" << no;
        auto eq = body.find('=');
        if (eq == std::string::npos) throw ConfigError(osw.str() + ": expected 'key = value'");
        std::string key = body.substr(0, eq);
        if (auto k = key.find_last_not_of(" \t"); k != std::string::npos) key.erase(k + 1);
        if (key.empty()) throw ConfigError(osw.str() + ": empty key");
        if (cfg.entries.count(key)) throw ConfigError(osw.str() + ": " + key + ": duplicate key");
        std::string rest = body.substr(eq + 1);
        std::vector<Token> toks = tokenize(rest, osw.str() + ": " + key);
        size_t pos = 0;
        CfgValue v = parse_value(toks, pos, no, osw.str() + ": " + key);
        if (pos != toks.size()) throw ConfigError(osw.str() + ": " + key + ": trailing tokens after value");
        cfg.entries.emplace(key, std::move(v));
        cfg.lines.emplace(key, no);
    }
    return cfg;
}

// ---------------- typed extraction ----------------

bool looks_integer(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

long long scalar_int(const Config& cfg, const std::string& key, const CfgValue& v) {
    if (v.is_list || !looks_integer(v.token))
        throw ConfigError(cfg.where(key) + ": expected an integer, got '" + (v.is_list ? "[...]" : v.token) + "'");
    return std::stoll(v.token);
}

Rational scalar_rational(const Config& cfg, const std::string& key, const CfgValue& v) {
    if (v.is_list) throw ConfigError(cfg.where(key) + ": expected a rational scalar, got a list");
    auto slash = v.token.find('/');
    std::string num = slash == std::string::npos ? v.token : v.token.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : v.token.substr(slash + 1);
    if (!looks_integer(num) || !looks_integer(den))
        throw ConfigError(cfg.where(key) + ": expected an integer or p/q rational, got '" + v.token + "'");
    Rational d = Rational::from_string(den);
    if (d.is_zero()) throw ConfigError(cfg.where(key) + ": zero denominator in '" + v.token + "'");
    return Rational::from_string(num) / d;
}

std::string get_word(const Config& cfg, const std::string& key) {
    const CfgValue& v = cfg.get(key);
    if (v.is_list) throw ConfigError(cfg.where(key) + ": expected a word, got a list");
    return v.token;
}

long long get_int(const Config& cfg, const std::string& key) { return scalar_int(cfg, key, cfg.get(key)); }

std::vector<int> int_list(const Config& cfg, const std::string& key, const CfgValue& v) {
    if (!v.is_list) throw ConfigError(cfg.where(key) + ": expected a list of integers");
    std::vector<int> out;
    for (const CfgValue& it : v.items) out.push_back(static_cast<int>(scalar_int(cfg, key, it)));
    return out;
}

std::vector<int> get_int_list(const Config& cfg, const std::string& key) { return int_list(cfg, key, cfg.get(key)); }

std::vector<std::vector<int>> get_weight_list(const Config& cfg, const std::string& key) {
    const CfgValue& v = cfg.get(key);
    if (!v.is_list) throw ConfigError(cfg.where(key) + ": expected a list of weight lists");
    std::vector<std::vector<int>> out;
    for (const CfgValue& it : v.items) {
        if (!it.is_list) throw ConfigError(cfg.where(key) + ": each entry must be a weight list like [1, 0]");
        out.push_back(int_list(cfg, key, it));
    }
    return out;
}

std::vector<Rational> get_rational_list(const Config& cfg, const std::string& key) {
    const CfgValue& v = cfg.get(key);
    if (!v.is_list) throw ConfigError(cfg.where(key) + ": expected a list of rationals");
    std::vector<Rational> out;
    for (const CfgValue& it : v.items) out.push_back(scalar_rational(cfg, key, it));
    return out;
}

// ---------------------------------------------------------------------------
// job assembly
// ---------------------------------------------------------------------------

struct Job {
    std::string command;
    std::string out_dir = ".";
    std::uint64_t seed = 0;

    std::string algebra;
    int n = 0;
    std::vector<int> levi;
    std::vector<std::vector<int>> reps;
    std::string lambda_mode = "symbolic";
    int samples = 5;
    std::optional<int> depth;
    int t_order = 2;

    std::vector<std::vector<int>> blocks;
    std::vector<Rational> l0, l1;

    std::string input;                      // hopf-check structure tensors
    std::vector<std::string> hopf_checks;   // axioms | self-base | dual-permutation
};

void check_known_keys(const Config& cfg, const std::set<std::string>& allowed, const std::string& command) {
    for (const auto& [key, val] : cfg.entries)
        if (!allowed.count(key))
            throw ConfigError(cfg.where(key) + ": unknown key for command '" + command + "'");
}

void read_algebra(const Config& cfg, Job& job) {
    std::string a = get_word(cfg, "algebra");
    if (a.size() < 3 || a.substr(0, 2) != "sl" || !looks_integer(a.substr(2)))
        throw ConfigError(cfg.where("algebra") + ": expected slN with N >= 2, got '" + a + "'");
    long long n = std::stoll(a.substr(2));
    if (n < 2 || n > 9) throw ConfigError(cfg.where("algebra") + ": rank out of range, expected sl2..sl9");
    job.algebra = a;
    job.n = static_cast<int>(n);
}

void read_levi(const Config& cfg, Job& job) {
    job.levi = cfg.has("levi") ? get_int_list(cfg, "levi") : std::vector<int>{};
    std::set<int> seen;
    for (int i : job.levi) {
        if (i < 0 || i >= job.n - 1)
            throw ConfigError(cfg.where("levi") + ": simple-root index " + std::to_string(i) +
                              " out of range 0.." + std::to_string(job.n - 2));
        if (!seen.insert(i).second)
            throw ConfigError(cfg.where("levi") + ": duplicate simple-root index " + std::to_string(i));
    }
}

void read_reps(const Config& cfg, Job& job, size_t count) {
    job.reps = get_weight_list(cfg, "reps");
    if (job.reps.size() != count)
        throw ConfigError(cfg.where("reps") + ": command '" + job.command + "' needs exactly " +
                          std::to_string(count) + " highest weights, got " + std::to_string(job.reps.size()));
    for (const auto& w : job.reps) {
        if (w.size() != static_cast<size_t>(job.n - 1))
            throw ConfigError(cfg.where("reps") + ": highest weight needs " + std::to_string(job.n - 1) +
                              " coordinates for " + job.algebra);
        for (int c : w)
            if (c < 0) throw ConfigError(cfg.where("reps") + ": highest weight coordinates must be nonnegative");
    }
}

void read_lambda_mode(const Config& cfg, Job& job) {
    if (cfg.has("lambda")) {
        job.lambda_mode = get_word(cfg, "lambda");
        if (job.lambda_mode != "symbolic" && job.lambda_mode != "samples")
            throw ConfigError(cfg.where("lambda") + ": expected 'symbolic' or 'samples'");
    }
    if (cfg.has("samples")) {
        long long s = get_int(cfg, "samples");
        if (s < 1) throw ConfigError(cfg.where("samples") + ": sample count must be positive");
        job.samples = static_cast<int>(s);
    }
    if (cfg.has("depth")) {
        long long d = get_int(cfg, "depth");
        if (d < 0) throw ConfigError(cfg.where("depth") + ": depth bound must be nonnegative");
        job.depth = static_cast<int>(d);
    }
}

void read_orbit_base(const Config& cfg, Job& job) {
    read_algebra(cfg, job);
    read_levi(cfg, job);
    job.blocks = get_weight_list(cfg, "blocks");
    for (const auto& w : job.blocks) {
        if (w.size() != static_cast<size_t>(job.n - 1))
            throw ConfigError(cfg.where("blocks") + ": highest weight needs " + std::to_string(job.n - 1) +
                              " coordinates for " + job.algebra);
        for (int c : w)
            if (c < 0) throw ConfigError(cfg.where("blocks") + ": highest weight coordinates must be nonnegative");
    }
    if (job.blocks.empty()) throw ConfigError(cfg.where("blocks") + ": at least one block is required");
    job.l0 = get_rational_list(cfg, "l0");
    job.l1 = get_rational_list(cfg, "l1");
    if (cfg.has("t_order")) {
        long long t = get_int(cfg, "t_order");
        if (t < 0) throw ConfigError(cfg.where("t_order") + ": order must be nonnegative");
        job.t_order = static_cast<int>(t);
    }
}

// ---------------------------------------------------------------------------
// character-point sampling: non-integer rationals of bounded height
// ---------------------------------------------------------------------------

struct Lcg {
    std::uint64_t s;
    explicit Lcg(std::uint64_t seed) : s(seed) { next(); }
    std::uint64_t next() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return s;
    }
};

Rational sample_coordinate(Lcg& rng) {
    long long den = 2 + static_cast<long long>((rng.next() >> 33) % 11);  // 2..12
    long long num = static_cast<long long>((rng.next() >> 33) % 81) - 40; // -40..40
    if (num % den == 0) num += 1;  // never an integer
    return Rational(num, den);
}

std::vector<Rational> sample_point(Lcg& rng, int r) {
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) out.push_back(sample_coordinate(rng));
    return out;
}

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

std::string poly_str(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rational a = c;
        bool neg = a < Rational(0);
        if (neg) a = -a;
        std::string mon;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mon.empty()) mon += "*";
            mon += "l" + std::to_string(i + 1);
            if (e[i] > 1) mon += "^" + std::to_string(e[i]);
        }
        std::string coef = a.str();
        std::string term = mon.empty() ? coef : (coef == "1" ? mon : coef + "*" + mon);
        if (first) {
            out += (neg ? "-" : "") + term;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + term;
        }
    }
    return out;
}

std::string ratfunc_str(const RatFunc& f) {
    if (f.den().is_constant() && f.den().constant_value() == Rational(1)) return poly_str(f.num());
    return "(" + poly_str(f.num()) + ")/(" + poly_str(f.den()) + ")";
}

ordered_json matrix_json(const Matrix<RatFunc>& m) {
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(ratfunc_str(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json matrix_json(const Matrix<Rational>& m) {
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json rational_list_json(const std::vector<Rational>& v) {
    ordered_json out = ordered_json::array();
    for (const Rational& q : v) out.push_back(q.str());
    return out;
}

ordered_json ag_json(const AgElement<Rational>& a) {
    ordered_json out = ordered_json::array();
    for (const auto& [hw, m] : a.blocks) {
        ordered_json blk;
        blk["weight"] = hw;
        blk["entries"] = matrix_json(m);
        out.push_back(std::move(blk));
    }
    return out;
}

// ---------------------------------------------------------------------------
// check bookkeeping
// ---------------------------------------------------------------------------

struct CheckList {
    ordered_json entries = ordered_json::array();
    bool all_hold = true;

    void add(const std::string& identity, const ordered_json& lambda, bool holds, int row = -1, int col = -1) {
        ordered_json e;
        e["identity"] = identity;
        e["lambda"] = lambda;
        e["holds"] = holds;
        if (!holds && row >= 0) e["violation"] = {{"row", row}, {"col", col}};
        entries.push_back(std::move(e));
        all_hold = all_hold && holds;
        std::cout << (holds ? "  [pass] " : "  [FAIL] ") << identity;
        if (lambda.is_string())
            std::cout << "  lambda=" << lambda.get<std::string>();
        else if (!lambda.is_null())
            std::cout << "  lambda=" << lambda.dump();
        if (!holds && row >= 0) std::cout << "  violated at entry (" << row << "," << col << ")";
        std::cout << "\n";
    }
};

template <class F>
std::pair<int, int> first_difference(const Matrix<F>& a, const Matrix<F>& b) {
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            if (!(a.at(r, c) == b.at(r, c))) return {r, c};
    return {-1, -1};
}

template <class F>
void add_identity_check(CheckList& list, const std::string& name, const ordered_json& lambda,
                        const IdentitySides<F>& sides) {
    auto [r, c] = first_difference(sides.lhs, sides.rhs);
    list.add(name, lambda, r < 0, r, c);
}

int finish(const Job& job, ordered_json& report, bool all_hold) {
    report["result"] = all_hold ? "pass" : "fail";
    fs::create_directories(job.out_dir);
    fs::path p = fs::path(job.out_dir) / (job.command + ".json");
    std::ofstream f(p, std::ios::binary);
    if (!f) throw ConfigError(p.string() + ": cannot open report file for writing");
    f << report.dump(2) << "\n";
    std::cout << "report: " << p.string() << "\n";
    std::cout << "result: " << (all_hold ? "pass" : "fail") << "\n";
    return all_hold ? 0 : 1;
}

// ---------------------------------------------------------------------------
// twist-pipeline commands
// ---------------------------------------------------------------------------

struct TwistSetup {
    LieAlgebra g;
    Levi levi;
    PbwOrder ord;
    std::vector<Rep> reps;
    std::vector<RatFunc> sym;

    explicit TwistSetup(const Job& job)
        : g(LieAlgebra::sl(job.n)), levi(g, job.levi), ord(levi) {
        for (const auto& w : job.reps) reps.push_back(irrep(g, w));
        for (int i = 0; i < levi.r(); ++i) sym.push_back(RatFunc::variable(levi.r(), i));
    }
};

/// With an explicit depth bound configured, refuse pairs whose canonical
/// intertwiner lives deeper than the bound (pair = inducing module, target).
void enforce_depth(const Job& job, const TwistSetup& s,
                   const std::vector<std::pair<const Rep*, const Rep*>>& pairs) {
    if (!job.depth) return;
    for (const auto& [a, b] : pairs) {
        InducingModule<RatFunc> x = rep_inducing(s.levi, s.sym, *a);
        int need = intertwiner_depth(x, *b);
        if (need > *job.depth)
            throw ConfigError("depth bound " + std::to_string(*job.depth) +
                              " is below the required intertwiner depth " + std::to_string(need) +
                              " for the requested modules");
    }
}

ordered_json base_report(const Job& job) {
    ordered_json rep;
    rep["command"] = job.command;
    rep["algebra"] = job.algebra;
    rep["levi"] = job.levi;
    rep["reps"] = job.reps;
    rep["lambda_mode"] = job.lambda_mode;
    if (job.lambda_mode == "samples") {
        rep["samples"] = job.samples;
        rep["seed"] = job.seed;
    }
    if (job.depth) rep["depth_bound"] = *job.depth;
    return rep;
}

/// Sampled character points, echoed into the report before any computation.
std::vector<std::vector<Rational>> draw_points(const Job& job, int r, ordered_json& report) {
    Lcg rng(job.seed);
    std::vector<std::vector<Rational>> pts;
    ordered_json echo = ordered_json::array();
    for (int k = 0; k < job.samples; ++k) {
        pts.push_back(sample_point(rng, r));
        echo.push_back(rational_list_json(pts.back()));
    }
    report["lambda_points"] = std::move(echo);
    return pts;
}

int count_total_weights(const Rep& v, const Rep& w) {
    std::set<std::vector<int>> seen;
    for (const auto& a : v.weights)
        for (const auto& b : w.weights) {
            std::vector<int> t = a;
            for (size_t i = 0; i < t.size(); ++i) t[i] += b[i];
            seen.insert(t);
        }
    return static_cast<int>(seen.size());
}

template <class F>
void twist_instance_checks(CheckList& list, const ordered_json& lam, const Matrix<F>& f, const Rep& v,
                           const Rep& w) {
    int idx = unipotence_index(f);
    int bound = count_total_weights(v, w);
    list.add("unipotence: (F - id) nilpotent with index " + std::to_string(idx) + " <= " + std::to_string(bound),
             lam, idx >= 0 && idx <= bound);
    list.add("weight preservation: F is block-diagonal over total weight", lam, preserves_weights(f, v, w));
}

int run_twist(const Job& job) {
    TwistSetup s(job);
    const Rep &v = s.reps[0], &w = s.reps[1];
    enforce_depth(job, s, {{&w, &v}});
    ordered_json report = base_report(job);
    CheckList list;
    if (job.lambda_mode == "symbolic") {
        Matrix<RatFunc> f = twist_star(s.ord, s.sym, v, w);
        report["matrix"] = matrix_json(f);
        twist_instance_checks(list, "symbolic", f, v, w);
    } else {
        auto pts = draw_points(job, s.levi.r(), report);
        ordered_json mats = ordered_json::array();
        for (const auto& pt : pts) {
            Matrix<Rational> f = twist_star(s.ord, pt, v, w);
            mats.push_back(matrix_json(f));
            twist_instance_checks(list, rational_list_json(pt), f, v, w);
        }
        report["matrices"] = std::move(mats);
    }
    report["checks"] = std::move(list.entries);
    return finish(job, report, list.all_hold);
}

template <class F>
void cocycle_checks(CheckList& list, const ordered_json& lam, const PbwOrder& ord, const std::vector<F>& lambda,
                    const Rep& v, const Rep& w, const Rep& u, bool cartan) {
    add_identity_check(list, "shifted cocycle identity (based factor)", lam,
                       cocycle_sides(ord, lambda, v, w, u, false));
    if (cartan)
        add_identity_check(list, "shifted cocycle identity (blockwise character shift)", lam,
                           cocycle_sides(ord, lambda, v, w, u, true));
}

int run_verify_cocycle(const Job& job) {
    TwistSetup s(job);
    const Rep &v = s.reps[0], &w = s.reps[1], &u = s.reps[2];
    Rep wu = tensor_rep(w, u), vw = tensor_rep(v, w), uw = tensor_rep(u, w);
    enforce_depth(job, s, {{&wu, &v}, {&u, &w}, {&u, &vw}, {&uw, &v}});
    bool cartan = job.levi.empty();
    ordered_json report = base_report(job);
    CheckList list;
    if (job.lambda_mode == "symbolic") {
        cocycle_checks(list, "symbolic", s.ord, s.sym, v, w, u, cartan);
    } else {
        auto pts = draw_points(job, s.levi.r(), report);
        for (const auto& pt : pts) cocycle_checks(list, rational_list_json(pt), s.ord, pt, v, w, u, cartan);
    }
    report["checks"] = std::move(list.entries);
    return finish(job, report, list.all_hold);
}

template <class F>
void qdybe_checks(CheckList& list, const ordered_json& lam, const PbwOrder& ord, const std::vector<F>& lambda,
                  const Rep& v, const Rep& w, const Rep& u, bool cartan) {
    add_identity_check(list, "dynamical Yang-Baxter equation (based shifts)", lam,
                       qdybe_based_sides(ord, lambda, v, w, u));
    if (cartan)
        add_identity_check(list, "dynamical Yang-Baxter equation (character shifts)", lam,
                           qdybe_sides(ord, lambda, v, w, u));
}

int run_verify_qdybe(const Job& job) {
    TwistSetup s(job);
    const Rep &v = s.reps[0], &w = s.reps[1], &u = s.reps[2];
    std::vector<std::pair<const Rep*, const Rep*>> pairs;
    for (const Rep* a : {&v, &w, &u})
        for (const Rep* b : {&v, &w, &u})
            if (a != b) pairs.emplace_back(a, b);
    enforce_depth(job, s, pairs);
    bool cartan = job.levi.empty();
    ordered_json report = base_report(job);
    CheckList list;
    if (job.lambda_mode == "symbolic") {
        qdybe_checks(list, "symbolic", s.ord, s.sym, v, w, u, cartan);
    } else {
        auto pts = draw_points(job, s.levi.r(), report);
        for (const auto& pt : pts) qdybe_checks(list, rational_list_json(pt), s.ord, pt, v, w, u, cartan);
    }
    report["checks"] = std::move(list.entries);
    return finish(job, report, list.all_hold);
}

/// First generator of the list whose coproduct action fails to commute.
template <class F>
void equivariance_check(CheckList& list, const std::string& name, const ordered_json& lam, const Matrix<F>& m,
                        const LieAlgebra& g, const Rep& v, const Rep& w, const std::vector<int>& gens) {
    for (int gi : gens) {
        Matrix<F> d = kron(promote_matrix<F>(v.act(gi)), Matrix<F>::identity(w.dim)) +
                      kron(Matrix<F>::identity(v.dim), promote_matrix<F>(w.act(gi)));
        auto [r, c] = first_difference(d * m, m * d);
        if (r >= 0) {
            list.add(name + " fails against generator " + g.generator_name(gi), lam, false, r, c);
            return;
        }
    }
    list.add(name, lam, true);
}

template <class F>
void run_equivariance_at(CheckList& list, const ordered_json& lam, const TwistSetup& s,
                         const std::vector<F>& lambda) {
    const Rep &v = s.reps[0], &w = s.reps[1];
    std::vector<int> gens = s.levi.levi_generators();
    for (int i = 0; i < s.g.rank(); ++i) gens.push_back(s.g.h_index(i));
    Matrix<F> f = twist_star(s.ord, lambda, v, w);
    equivariance_check(list, "Levi equivariance of the twist: [pi(Dx), F] = 0", lam, f, s.g, v, w, gens);
    Matrix<F> rbar = dynamical_r(s.ord, lambda, v, w);
    equivariance_check(list, "Levi equivariance of the R-matrix: [pi(Dx), R] = 0", lam, rbar, s.g, v, w, gens);
}

int run_verify_equivariance(const Job& job) {
    TwistSetup s(job);
    const Rep &v = s.reps[0], &w = s.reps[1];
    enforce_depth(job, s, {{&w, &v}, {&v, &w}});
    ordered_json report = base_report(job);
    CheckList list;
    if (job.lambda_mode == "symbolic") {
        run_equivariance_at(list, "symbolic", s, s.sym);
    } else {
        auto pts = draw_points(job, s.levi.r(), report);
        for (const auto& pt : pts) run_equivariance_at(list, rational_list_json(pt), s, pt);
    }
    report["checks"] = std::move(list.entries);
    return finish(job, report, list.all_hold);
}

int run_verify_cdybe(const Job& job) {
    TwistSetup s(job);
    const Rep &v = s.reps[0], &w = s.reps[1], &u = s.reps[2];
    std::vector<std::pair<const Rep*, const Rep*>> pairs;
    for (const Rep* a : {&v, &w, &u})
        for (const Rep* b : {&v, &w, &u})
            if (a != b) pairs.emplace_back(a, b);
    enforce_depth(job, s, pairs);
    ordered_json report = base_report(job);
    CheckList list;

    Matrix<RatFunc> r_vw = classical_r(dynamical_r(s.ord, s.sym, v, w));
    Matrix<RatFunc> r_vu = classical_r(dynamical_r(s.ord, s.sym, v, u));
    Matrix<RatFunc> r_wu = classical_r(dynamical_r(s.ord, s.sym, w, u));
    report["classical_r"] = matrix_json(r_vw);

    Matrix<RatFunc> res = cdybe_residual(s.levi, v, w, u, r_vw, r_vu, r_wu);
    Matrix<RatFunc> zero(res.rows(), res.cols());
    auto [rr, rc] = first_difference(res, zero);
    list.add("classical dynamical Yang-Baxter equation (zero coupling)", "symbolic", rr < 0, rr, rc);

    if (v.highest == w.highest) {
        Matrix<RatFunc> sym_part = symmetrized(r_vw, v.dim);
        std::vector<int> gens;
        for (int p = 0; p < s.g.num_positive(); ++p) {
            gens.push_back(s.g.e_index(p));
            gens.push_back(s.g.f_index(p));
        }
        for (int i = 0; i < s.g.rank(); ++i) gens.push_back(s.g.h_index(i));
        equivariance_check(list, "invariance of the symmetric part: [pi(Dx), r + r21] = 0", "symbolic", sym_part,
                           s.g, v, w, gens);
    }

    report["checks"] = std::move(list.entries);
    return finish(job, report, list.all_hold);
}

// ---------------------------------------------------------------------------
// orbit commands
// ---------------------------------------------------------------------------

void check_parameter_sizes(const Job& job, const Levi& levi, const Config& cfg) {
    if (static_cast<int>(job.l0.size()) != levi.r())
        throw ConfigError(cfg.where("l0") + ": expected " + std::to_string(levi.r()) +
                          " character coordinates, got " + std::to_string(job.l0.size()));
    if (static_cast<int>(job.l1.size()) != levi.r())
        throw ConfigError(cfg.where("l1") + ": expected " + std::to_string(levi.r()) +
                          " character coordinates, got " + std::to_string(job.l1.size()));
}

ordered_json orbit_report(const Job& job) {
    ordered_json rep;
    rep["command"] = job.command;
    rep["algebra"] = job.algebra;
    rep["levi"] = job.levi;
    rep["blocks"] = job.blocks;
    rep["l0"] = rational_list_json(job.l0);
    rep["l1"] = rational_list_json(job.l1);
    rep["t_order"] = job.t_order;
    return rep;
}

int run_star_table(const Job& job, const Config& cfg) {
    LieAlgebra g = LieAlgebra::sl(job.n);
    Levi levi(g, job.levi);
    check_parameter_sizes(job, levi, cfg);
    MatrixCoeffAlgebra alg(levi, job.blocks);

    std::vector<AgElement<Rational>> basis;
    std::vector<int> nu(static_cast<size_t>(levi.r()), 0);
    for (const auto& hw : job.blocks)
        for (auto& sec : weight_sections(alg, hw, nu)) basis.push_back(std::move(sec));

    ordered_json report = orbit_report(job);
    ordered_json jbasis = ordered_json::array();
    for (size_t i = 0; i < basis.size(); ++i) {
        ordered_json e;
        e["index"] = i;
        e["element"] = ag_json(basis[i]);
        jbasis.push_back(std::move(e));
    }
    report["basis"] = std::move(jbasis);

    ordered_json table = ordered_json::array();
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) {
            AgSeries prod = star_series(alg, job.l0, job.l1, job.t_order, as_series(basis[i], job.t_order),
                                        as_series(basis[j], job.t_order));
            ordered_json entry;
            entry["left"] = i;
            entry["right"] = j;
            ordered_json orders = ordered_json::array();
            for (const auto& coeff : prod) orders.push_back(ag_json(coeff));
            entry["orders"] = std::move(orders);
            table.push_back(std::move(entry));
        }
    report["table"] = std::move(table);
    std::cout << "  star table: " << basis.size() << " invariant sections, orders 0.." << job.t_order << "\n";
    return finish(job, report, true);
}

/// Element spec: [hw, i, j] picks one coefficient, a list of
/// [hw, i, j, coeff] terms builds a combination.
AgElement<Rational> get_element(const Config& cfg, const std::string& key, const MatrixCoeffAlgebra& alg) {
    const CfgValue& v = cfg.get(key);
    if (!v.is_list || v.items.empty())
        throw ConfigError(cfg.where(key) + ": expected [weight, row, col] or a list of [weight, row, col, coeff]");
    auto term = [&](const CfgValue& tv) -> AgElement<Rational> {
        if (!tv.is_list || tv.items.size() < 3 || tv.items.size() > 4 || !tv.items[0].is_list)
            throw ConfigError(cfg.where(key) + ": each term must be [weight, row, col] or [weight, row, col, coeff]");
        std::vector<int> hw = int_list(cfg, key, tv.items[0]);
        int i = static_cast<int>(scalar_int(cfg, key, tv.items[1]));
        int j = static_cast<int>(scalar_int(cfg, key, tv.items[2]));
        Rational c = tv.items.size() == 4 ? scalar_rational(cfg, key, tv.items[3]) : Rational(1);
        try {
            return coeff_element<Rational>(alg, hw, i, j).scaled(c);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(cfg.where(key) + ": " + e.what());
        }
    };
    if (!v.items[0].is_list || (!v.items[0].items.empty() && !v.items[0].items[0].is_list)) {
        // single term [hw, i, j]
        return term(v);
    }
    AgElement<Rational> out;
    for (const CfgValue& tv : v.items) out = out + term(tv);
    return out;
}

int run_bundle_check(const Job& job, const Config& cfg) {
    LieAlgebra g = LieAlgebra::sl(job.n);
    Levi levi(g, job.levi);
    check_parameter_sizes(job, levi, cfg);
    MatrixCoeffAlgebra alg(levi, job.blocks);

    AgElement<Rational> a = get_element(cfg, "function_a", alg);
    AgElement<Rational> b = get_element(cfg, "function_b", alg);
    AgElement<Rational> s = get_element(cfg, "section_s", alg);
    AgElement<Rational> t = get_element(cfg, "section_t", alg);

    auto character = [&](const std::string& key, const AgElement<Rational>& x) {
        try {
            return ru2_character(alg, x);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(cfg.where(key) + ": " + e.what());
        }
    };
    std::vector<int> zero(static_cast<size_t>(levi.r()), 0);
    if (character("function_a", a) != zero)
        throw ConfigError(cfg.where("function_a") + ": not an invariant function (nonzero section character)");
    if (character("function_b", b) != zero)
        throw ConfigError(cfg.where("function_b") + ": not an invariant function (nonzero section character)");
    std::vector<int> char_s = character("section_s", s);
    if (character("section_t", t) != char_s)
        throw ConfigError(cfg.where("section_t") + ": sections belong to different bundles (characters differ)");

    ordered_json report = orbit_report(job);
    ordered_json jc = ordered_json::array();
    for (int c : char_s) jc.push_back(-c);  // bundle character alpha = -wt2
    report["bundle_character"] = std::move(jc);

    BundleReport br = bundle_module_check(alg, job.l0, job.l1, job.t_order, a, b, s, t);
    CheckList list;
    list.add("left module law: a * (s * t) = (a * s) * t at every order <= " + std::to_string(br.orders),
             ordered_json(nullptr), br.left_law);
    list.add("shifted right module law: (s * a) * b = s * (a *' b) with the character-shifted inner product",
             ordered_json(nullptr), br.right_law);
    report["orders_checked"] = br.orders;
    report["checks"] = std::move(list.entries);
    return finish(job, report, list.all_hold);
}

// ---------------------------------------------------------------------------
// hopf-check
// ---------------------------------------------------------------------------

Rational json_rational(const nlohmann::json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        auto slash = s.find('/');
        std::string num = slash == std::string::npos ? s : s.substr(0, slash);
        std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
        if (!looks_integer(num) || !looks_integer(den) || den == "0")
            throw ConfigError(where + ": bad rational '" + s + "'");
        return Rational::from_string(num) / Rational::from_string(den);
    }
    throw ConfigError(where + ": expected an integer or a \"p/q\" string");
}

const nlohmann::json& json_array(const nlohmann::json& v, size_t size, const std::string& where) {
    if (!v.is_array() || v.size() != size)
        throw ConfigError(where + ": expected an array of length " + std::to_string(size));
    return v;
}

/// Structure-tensor input: mult[i][j] is the coefficient vector of e_i e_j,
/// comult[i][a][b] the coefficient of e_a (x) e_b in the coproduct of e_i,
/// antipode[i] the coefficient vector of the antipode of e_i.
FinHopf load_hopf(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open structure-tensor input");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
        throw ConfigError(path + ": dim: expected a positive integer");
    int d = j["dim"].get<int>();
    if (d <= 0) throw ConfigError(path + ": dim: expected a positive integer");
    auto field = [&](const char* name) -> const nlohmann::json& {
        if (!j.contains(name)) throw ConfigError(path + ": " + name + ": required field is missing");
        return j[name];
    };
    size_t sd = static_cast<size_t>(d);
    FinHopf h;
    h.dim = d;
    h.mult.assign(sd, Matrix<Rational>(d, d));
    h.comult.assign(sd, Matrix<Rational>(d, d));
    h.unit.assign(sd, Rational(0));
    h.counit.assign(sd, Rational(0));
    h.antipode = Matrix<Rational>(d, d);

    const nlohmann::json& mult = json_array(field("mult"), sd, path + ": mult");
    for (int i = 0; i < d; ++i) {
        const nlohmann::json& row = json_array(mult[static_cast<size_t>(i)], sd, path + ": mult[" + std::to_string(i) + "]");
        for (int jj = 0; jj < d; ++jj) {
            const nlohmann::json& vec =
                json_array(row[static_cast<size_t>(jj)], sd,
                           path + ": mult[" + std::to_string(i) + "][" + std::to_string(jj) + "]");
            for (int k = 0; k < d; ++k)
                h.mult[static_cast<size_t>(k)].at(i, jj) = json_rational(vec[static_cast<size_t>(k)], path + ": mult");
        }
    }
    const nlohmann::json& unit = json_array(field("unit"), sd, path + ": unit");
    for (int i = 0; i < d; ++i) h.unit[static_cast<size_t>(i)] = json_rational(unit[static_cast<size_t>(i)], path + ": unit");
    const nlohmann::json& comult = json_array(field("comult"), sd, path + ": comult");
    for (int i = 0; i < d; ++i) {
        const nlohmann::json& m =
            json_array(comult[static_cast<size_t>(i)], sd, path + ": comult[" + std::to_string(i) + "]");
        for (int a = 0; a < d; ++a) {
            const nlohmann::json& vec =
                json_array(m[static_cast<size_t>(a)], sd,
                           path + ": comult[" + std::to_string(i) + "][" + std::to_string(a) + "]");
            for (int b = 0; b < d; ++b)
                h.comult[static_cast<size_t>(i)].at(a, b) = json_rational(vec[static_cast<size_t>(b)], path + ": comult");
        }
    }
    const nlohmann::json& counit = json_array(field("counit"), sd, path + ": counit");
    for (int i = 0; i < d; ++i)
        h.counit[static_cast<size_t>(i)] = json_rational(counit[static_cast<size_t>(i)], path + ": counit");
    const nlohmann::json& anti = json_array(field("antipode"), sd, path + ": antipode");
    for (int i = 0; i < d; ++i) {
        const nlohmann::json& vec =
            json_array(anti[static_cast<size_t>(i)], sd, path + ": antipode[" + std::to_string(i) + "]");
        for (int jj = 0; jj < d; ++jj)
            h.antipode.at(jj, i) = json_rational(vec[static_cast<size_t>(jj)], path + ": antipode");
    }
    return h;
}

int run_hopf_check(const Job& job) {
    FinHopf h = load_hopf(job.input);
    ordered_json report;
    report["command"] = job.command;
    report["input"] = job.input;
    report["dim"] = h.dim;
    CheckList list;
    ordered_json details = ordered_json::array();
    for (const std::string& c : job.hopf_checks) {
        ordered_json d;
        d["check"] = c;
        if (c == "axioms") {
            HopfReport r = check_hopf(h);
            d["flags"] = {{"associative", r.associative}, {"unital", r.unital},
                          {"coassociative", r.coassociative}, {"counital", r.counital},
                          {"compatible", r.compatible}, {"antipode", r.antipode}};
            list.add("Hopf algebra axioms on all basis tuples", ordered_json(nullptr), r.pass());
        } else if (c == "self-base") {
            BaseReport r = check_base_algebra(h, self_base(h));
            d["flags"] = {{"module", r.module}, {"module_algebra", r.module_algebra},
                          {"comodule", r.comodule}, {"comodule_algebra", r.comodule_algebra},
                          {"exchange_law", r.exchange_law}, {"braided_commutative", r.braided_commutative},
                          {"permutation_equivariant", r.permutation_equivariant},
                          {"permutation_invertible", r.permutation_invertible}};
            list.add("base-algebra axioms for the algebra over itself", ordered_json(nullptr), r.pass());
        } else if (c == "dual-permutation") {
            DualPermutationReport r = check_dual_permutation(h);
            d["flags"] = {{"invertible", r.invertible}, {"stated_inverse", r.stated_inverse},
                          {"equivariant", r.equivariant}};
            list.add("dual-pairing permutation is an invertible module map", ordered_json(nullptr), r.pass());
        }
        details.push_back(std::move(d));
    }
    report["checks"] = std::move(list.entries);
    report["details"] = std::move(details);
    return finish(job, report, list.all_hold);
}

// ---------------------------------------------------------------------------
// dispatch
// ---------------------------------------------------------------------------

Job build_job(const std::string& command, const Config& cfg, const std::string& out_dir, std::uint64_t seed,
              std::optional<int> samples_flag, std::optional<int> depth_flag, std::optional<int> t_order_flag) {
    Job job;
    job.command = command;
    job.out_dir = out_dir;
    job.seed = seed;

    const std::set<std::string> lam_keys{"algebra", "levi", "reps", "lambda", "samples", "depth"};
    const std::set<std::string> orbit_keys{"algebra", "levi", "blocks", "l0", "l1", "t_order"};

    if (command == "twist" || command == "verify-cocycle" || command == "verify-qdybe" ||
        command == "verify-equivariance") {
        check_known_keys(cfg, lam_keys, command);
        read_algebra(cfg, job);
        read_levi(cfg, job);
        read_reps(cfg, job, (command == "twist" || command == "verify-equivariance") ? 2 : 3);
        read_lambda_mode(cfg, job);
    } else if (command == "verify-cdybe") {
        check_known_keys(cfg, {"algebra", "levi", "reps", "lambda", "depth"}, command);
        read_algebra(cfg, job);
        read_levi(cfg, job);
        read_reps(cfg, job, 3);
        if (cfg.has("lambda") && get_word(cfg, "lambda") != "symbolic")
            throw ConfigError(cfg.where("lambda") +
                              ": the classical limit is a series extraction and needs lambda = symbolic");
        if (cfg.has("depth")) {
            long long d = get_int(cfg, "depth");
            if (d < 0) throw ConfigError(cfg.where("depth") + ": depth bound must be nonnegative");
            job.depth = static_cast<int>(d);
        }
    } else if (command == "star-table") {
        check_known_keys(cfg, orbit_keys, command);
        read_orbit_base(cfg, job);
    } else if (command == "bundle-check") {
        std::set<std::string> keys = orbit_keys;
        keys.insert({"function_a", "function_b", "section_s", "section_t"});
        check_known_keys(cfg, keys, command);
        read_orbit_base(cfg, job);
    } else if (command == "hopf-check") {
        check_known_keys(cfg, {"input", "checks"}, command);
        std::string p = get_word(cfg, "input");
        fs::path ip(p);
        job.input = (ip.is_absolute() || cfg.dir.empty()) ? ip.string() : (fs::path(cfg.dir) / ip).string();
        if (cfg.has("checks")) {
            const CfgValue& v = cfg.get("checks");
            if (!v.is_list) throw ConfigError(cfg.where("checks") + ": expected a list of check names");
            for (const CfgValue& it : v.items) {
                if (it.is_list || (it.token != "axioms" && it.token != "self-base" && it.token != "dual-permutation"))
                    throw ConfigError(cfg.where("checks") +
                                      ": expected names from {axioms, self-base, dual-permutation}");
                job.hopf_checks.push_back(it.token);
            }
        }
        if (job.hopf_checks.empty()) job.hopf_checks = {"axioms"};
    }

    if (samples_flag) {
        if (*samples_flag < 1) throw ConfigError("--samples: sample count must be positive");
        job.samples = *samples_flag;
    }
    if (depth_flag) {
        if (*depth_flag < 0) throw ConfigError("--depth: depth bound must be nonnegative");
        job.depth = *depth_flag;
    }
    if (t_order_flag) {
        if (*t_order_flag < 0) throw ConfigError("--t-order: order must be nonnegative");
        job.t_order = *t_order_flag;
    }
    return job;
}

int run(const Job& job, const Config& cfg) {
    if (job.command == "twist") return run_twist(job);
    if (job.command == "verify-cocycle") return run_verify_cocycle(job);
    if (job.command == "verify-qdybe") return run_verify_qdybe(job);
    if (job.command == "verify-cdybe") return run_verify_cdybe(job);
    if (job.command == "verify-equivariance") return run_verify_equivariance(job);
    if (job.command == "star-table") return run_star_table(job, cfg);
    if (job.command == "bundle-check") return run_bundle_check(job, cfg);
    if (job.command == "hopf-check") return run_hopf_check(job);
    throw ConfigError("unknown command '" + job.command + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dyntwist: dynamical twists, R-matrices, and their verification reports"};
    app.require_subcommand(1);

    std::string config_path, out_dir = ".";
    std::uint64_t seed = 0;
    std::optional<int> samples_flag, depth_flag, t_order_flag;
    app.add_option("--config", config_path, "key/value config file")->required();
    app.add_option("--out", out_dir, "directory for the JSON report");
    app.add_option("--samples", samples_flag, "number of sampled character points (overrides config)");
    app.add_option("--depth", depth_flag, "refuse intertwiners deeper than this bound (overrides config)");
    app.add_option("--t-order", t_order_flag, "truncation order of t-expansions (overrides config)");
    app.add_option("--seed", seed, "seed for character-point sampling");

    static const char* names[] = {"twist",          "verify-cocycle",       "verify-qdybe", "verify-cdybe",
                                  "verify-equivariance", "star-table",      "bundle-check", "hopf-check"};
    static const char* descs[] = {
        "compute the dynamical twist and export it",
        "verify the shifted cocycle identity",
        "verify the dynamical Yang-Baxter equation",
        "verify the classical dynamical Yang-Baxter equation at order t",
        "verify Levi equivariance of twist and R-matrix",
        "tabulate the quantized orbit product on invariant sections",
        "verify the module laws of quantized bundle sections",
        "verify Hopf / base-algebra axioms from structure tensors"};
    for (size_t i = 0; i < 8; ++i) {
        CLI::App* sub = app.add_subcommand(names[i], descs[i]);
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string command = app.get_subcommands().front()->get_name();
    try {
        Config cfg = load_config(config_path);
        Job job = build_job(command, cfg, out_dir, seed, samples_flag, depth_flag, t_order_flag);
        return run(job, cfg);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const NonGenericError& e) {
        std::cerr << "genericity error: " << e.what() << "\n";
        return 2;
    } catch (const PoleAtOriginError& e) {
        std::cerr << "series error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
