// Command-line front end: homology and colored-homology computations,
// framing sweeps, recursion/series reports, convention conversion, with an
// on-disk result cache and JSON/CSV/table output.
#include <CLI11.hpp>
#include <ckh/colored.hpp>
#include <ckh/kh.hpp>
#include <ckh/observations.hpp>
#include <ckh/versions.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace ckh;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr const char* kEngineVersion = "ckh-1.0";

struct CommonOpts {
    std::string braid, pd;
    std::vector<int> framing;
    std::string convention = "Kh";
    std::string out = "table";
    std::string cache_dir;
    int threads = 1;
    int budget = 64;
};

void add_diagram_opts(CLI::App* c, CommonOpts& o) {
    c->add_option("--braid", o.braid, "braid word, e.g. \"{1,1,1}\"");
    c->add_option("--pd", o.pd, "PD code, e.g. \"PD[X[1,4,2,3],...]\"");
    c->add_option("--framing", o.framing,
                  "per-component framing integers (default all 0)");
}

void add_output_opts(CLI::App* c, CommonOpts& o) {
    c->add_option("--convention", o.convention, "Kh|KhBar|KhR2|KhR2framed")
        ->check(CLI::IsMember({"Kh", "KhBar", "KhR2", "KhR2framed"}));
    c->add_option("--out", o.out, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    c->add_option("--cache-dir", o.cache_dir, "directory for the result cache");
    c->add_option("--threads", o.threads,
                  "worker threads (reserved; computations are sequential)");
    c->add_option("--budget-crossings", o.budget,
                  "largest diagram the exact engine will attempt");
}

LinkDiagram load_diagram(const CommonOpts& o) {
    if (!o.braid.empty() && !o.pd.empty())
        throw std::invalid_argument("give either --braid or --pd, not both");
    if (!o.pd.empty()) return from_pd_code(o.pd);
    return from_braid_word(parse_braid(o.braid));
}

std::vector<int> framing_or_zero(const CommonOpts& o, const LinkDiagram& d) {
    if (o.framing.empty()) return std::vector<int>(d.components.size(), 0);
    if (o.framing.size() != d.components.size())
        throw std::invalid_argument("framing count != component count");
    return o.framing;
}

std::string fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

// Cache keyed on the canonical diagram form plus all parameters; entries are
// written atomically (temp file + rename) and verified on read.
class Cache {
  public:
    explicit Cache(const std::string& dir) : dir_(dir) {
        if (!dir_.empty()) fs::create_directories(dir_);
    }
    std::optional<json> get(const std::string& key) const {
        if (dir_.empty()) return std::nullopt;
        std::ifstream in(path(key));
        if (!in) return std::nullopt;
        json j;
        in >> j;
        if (j.value("key", "") != key || j.value("engine", "") != kEngineVersion)
            return std::nullopt;
        return j.at("value");
    }
    void put(const std::string& key, const json& value) const {
        if (dir_.empty()) return;
        json j{{"key", key}, {"engine", kEngineVersion}, {"value", value}};
        fs::path tmp = path(key) + ".tmp";
        {
            std::ofstream out(tmp);
            out << j.dump(2) << "\n";
        }
        fs::rename(tmp, path(key));
    }

  private:
    std::string path(const std::string& key) const {
        return (fs::path(dir_) / (fnv1a(key) + ".json")).string();
    }
    std::string dir_;
};

std::string cache_key(const std::string& op, const LinkDiagram& d,
                      const std::vector<int>& framing, const std::string& rest) {
    std::ostringstream os;
    os << op << "|" << d.canonical_key() << "|f=";
    for (int k : framing) os << k << ",";
    os << "|" << rest;
    return os.str();
}

void emit_poly(const Laurent2& p, Convention conv, const std::string& fmt,
               const json& extra = json::object()) {
    Superpolynomial s{conv, p};
    if (fmt == "json") {
        json j = s.to_json();
        for (auto& [k, v] : extra.items()) j[k] = v;
        std::cout << j.dump(2) << "\n";
    } else if (fmt == "csv") {
        std::cout << s.csv();
    } else {
        for (auto& [k, v] : extra.items())
            std::cout << "# " << k << " = " << v.dump() << "\n";
        std::cout << p.str() << "\n";
    }
}

int cmd_kh(const CommonOpts& o) {
    LinkDiagram d = load_diagram(o);
    auto fr = framing_or_zero(o, d);
    LinkDiagram framed = d.with_framing(fr);
    Convention conv = convention_from_string(o.convention);
    Cache cache(o.cache_dir);
    std::string key = cache_key("kh", d, fr, "conv=" + o.convention);
    json jp;
    if (auto hit = cache.get(key)) {
        jp = *hit;
    } else {
        jp = kh(framed, conv, Method::Auto, o.budget).to_json();
        cache.put(key, jp);
    }
    Superpolynomial s = Superpolynomial::from_json(jp);
    emit_poly(s.p, s.conv, o.out);
    return 0;
}

json colored_to_json(const ColoredResult& r) {
    json cables = json::array();
    for (auto& [cv, p] : r.cables_used)
        cables.push_back({{"colors", cv},
                          {"terms", Superpolynomial{r.conv, p}.to_json()["terms"]}});
    json j = Superpolynomial{r.conv, r.poly}.to_json();
    j["color"] = r.colors;
    j["framing"] = r.framing;
    j["method"] = r.method;
    j["diagram"] = r.diagram_key;
    j["cables"] = cables;
    return j;
}

int cmd_colored(const CommonOpts& o, const std::vector<int>& colors,
                const std::string& method) {
    LinkDiagram d = load_diagram(o);
    auto fr = framing_or_zero(o, d);
    std::vector<int> cols = colors;
    if (cols.empty()) cols.assign(d.components.size(), 1);
    if (cols.size() != d.components.size())
        throw std::invalid_argument("color count != component count");
    Convention conv = convention_from_string(o.convention);
    Cache cache(o.cache_dir);

    if (method == "formula") {
        std::ostringstream ps;
        ps << "conv=" << o.convention << "|n=";
        for (int n : cols) ps << n << ",";
        std::string key = cache_key("colored", d, fr, ps.str());
        json j;
        if (auto hit = cache.get(key)) {
            j = *hit;
        } else {
            j = colored_to_json(colored_superpoly(d, fr, cols, conv, o.budget));
            cache.put(key, j);
        }
        Superpolynomial s = Superpolynomial::from_json(j);
        emit_poly(s.p, s.conv, o.out,
                  {{"color", j["color"]}, {"framing", j["framing"]},
                   {"method", j["method"]}});
        return 0;
    }

    // homology-level versions need a knot and a single color
    if (d.components.size() != 1)
        throw std::invalid_argument("--method " + method + " expects a knot");
    LinkDiagram framed = d.with_framing(fr);
    // version computations build full resolution cubes; cap their size
    VersionsResult vr = compute_versions(framed, cols[0], std::min(o.budget, 20));
    if (method == "all") {
        json j{{"color", vr.color},
               {"framing", fr},
               {"all_agree", vr.all_agree},
               {"reference",
                Superpolynomial{Convention::Kh, vr.reference}.to_json()["terms"]}};
        json versions = json::object();
        for (auto& [name, p] : vr.polys)
            versions[name] = Superpolynomial{Convention::Kh, p}.to_json()["terms"];
        j["versions"] = versions;
        if (o.out == "json") {
            std::cout << j.dump(2) << "\n";
        } else {
            for (auto& [name, p] : vr.polys)
                std::cout << name << ": " << p.str() << "\n";
            std::cout << "reference: " << vr.reference.str() << "\n"
                      << "all_agree: " << (vr.all_agree ? "yes" : "no") << "\n";
        }
        return vr.all_agree ? 0 : 4;
    }
    auto it = vr.polys.find(method);
    if (it == vr.polys.end())
        throw std::invalid_argument("unknown method: " + method);
    Laurent2 p = detail::from_kh_indices(it->second, conv, framed.writhe());
    emit_poly(p, conv, o.out, {{"method", method}, {"color", cols[0]}});
    return 0;
}

int cmd_sweep(const CommonOpts& o, int color, const std::string& window) {
    LinkDiagram d = load_diagram(o);
    int a, b;
    char colon;
    std::istringstream ws(window);
    if (!(ws >> a >> colon >> b) || colon != ':' || a > b)
        throw std::invalid_argument("bad --window, expected a:b");
    Cache cache(o.cache_dir);
    std::string key = cache_key("sweep", d, {},
                                "n=" + std::to_string(color) + "|w=" + window);
    json j;
    if (auto hit = cache.get(key)) {
        j = *hit;
    } else {
        SweepResult r = framing_sweep(d, color, a, b, o.budget);
        json dims = json::object();
        for (auto& [k, v] : r.dims) dims[std::to_string(k)] = v;
        j = {{"diagram", r.diagram_key}, {"color", r.color},
             {"window", {r.kmin, r.kmax}}, {"dims", dims},
             {"minimizers", r.minimizers}};
        cache.put(key, j);
    }
    if (o.out == "json") {
        std::cout << j.dump(2) << "\n";
    } else if (o.out == "csv") {
        std::cout << "framing,dim\n";
        for (auto& [k, v] : j["dims"].items())
            std::cout << k << "," << v.get<long long>() << "\n";
    } else {
        std::cout << "framing  dim\n";
        for (auto& [k, v] : j["dims"].items())
            std::cout << k << "  " << v.get<long long>() << "\n";
        std::cout << "minimizers: " << j["minimizers"].dump() << "\n";
    }
    return 0;
}

int cmd_recursion(const CommonOpts& o, int maxn) {
    RecursionReport rep = verify_recursion(maxn, o.budget);
    if (o.out == "json") {
        json entries = json::array();
        for (auto& e : rep.entries)
            entries.push_back({{"n", e.n},
                               {"recursion_ok", e.recursion_ok},
                               {"box_ok", e.box_ok},
                               {"poly", e.computed.str()}});
        json j{{"max_color", maxn},
               {"calibration_ok", rep.calibration_ok},
               {"tribonacci_ok", rep.tribonacci_ok},
               {"dims", rep.dims},
               {"entries", entries},
               {"all_ok", rep.all_ok}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "n  dim  recursion  box\n";
        for (int n = 0; n <= maxn; ++n) {
            std::cout << n << "  " << rep.dims[n] << "  ";
            bool found = false;
            for (auto& e : rep.entries)
                if (e.n == n) {
                    std::cout << (e.recursion_ok ? "ok" : "FAIL") << "  "
                              << (e.box_ok ? "ok" : "FAIL");
                    found = true;
                }
            if (!found) std::cout << "-  " << (support_box_matches(rep.P[n], n) ? "ok" : "FAIL");
            std::cout << "\n";
        }
        std::cout << "calibration(n=1,2): "
                  << (rep.calibration_ok ? "ok (identity shift)" : "FAIL")
                  << "\ntribonacci dims: " << (rep.tribonacci_ok ? "ok" : "FAIL")
                  << "\nall: " << (rep.all_ok ? "ok" : "FAIL") << "\n";
    }
    return rep.all_ok ? 0 : 4;
}

int cmd_lasagna(const CommonOpts& o, int parity, int tmin, int qmin, int kmax) {
    TruncatedSeries s = lasagna_series(parity, tmin, qmin, kmax);
    if (o.out == "json") {
        json terms = json::array();
        for (auto& [e, c] : s.c)
            terms.push_back({{"t", e.first}, {"q", e.second}, {"coeff", c}});
        json j{{"parity", s.parity}, {"tmin", s.tmin}, {"qmin", s.qmin},
               {"terms", terms}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "t,q,coeff\n";
        for (auto& [e, c] : s.c)
            std::cout << e.first << "," << e.second << "," << c << "\n";
    }
    return 0;
}

int cmd_convert(const CommonOpts& o, const std::string& file,
                const std::string& to, int writhe) {
    json j;
    if (file.empty() || file == "-") {
        std::cin >> j;
    } else {
        std::ifstream in(file);
        if (!in) throw std::invalid_argument("cannot open " + file);
        in >> j;
    }
    Superpolynomial s = Superpolynomial::from_json(j);
    Superpolynomial r = convert_convention(s, convention_from_string(to), writhe);
    emit_poly(r.p, r.conv, o.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"colored Khovanov homology toolkit"};
    app.require_subcommand(1);
    CommonOpts o;

    auto* c_kh = app.add_subcommand("kh", "Khovanov homology of a diagram");
    add_diagram_opts(c_kh, o);
    add_output_opts(c_kh, o);

    std::vector<int> colors;
    std::string method = "formula";
    auto* c_col =
        app.add_subcommand("colored", "colored superpolynomial of a framed link");
    add_diagram_opts(c_col, o);
    add_output_opts(c_col, o);
    c_col->add_option("--color", colors, "per-component colors");
    c_col->add_option("--method", method,
                      "formula|Inv|Coinv|Hplus|Hminus|Ker|Coker|Im|Coim|all")
        ->check(CLI::IsMember({"formula", "Inv", "Coinv", "Hplus", "Hminus",
                               "Ker", "Coker", "Im", "Coim", "all"}));

    int color = 2;
    std::string window = "-4:4";
    auto* c_sw = app.add_subcommand("sweep", "total dimension across framings");
    add_diagram_opts(c_sw, o);
    add_output_opts(c_sw, o);
    c_sw->add_option("--color", color, "color to sweep");
    c_sw->add_option("--window", window, "framing window a:b");

    int maxn = 4;
    auto* c_rec =
        app.add_subcommand("recursion", "three-term recursion report (1-framed unknot)");
    add_output_opts(c_rec, o);
    c_rec->add_option("--max-color", maxn, "largest color to verify");

    int parity = 0, tmin = -12, qmin = -4, kmax = 64;
    auto* c_las = app.add_subcommand("lasagna", "truncated stabilized series");
    add_output_opts(c_las, o);
    c_las->add_option("--parity", parity)->check(CLI::IsMember({0, 1}));
    c_las->add_option("--tmin", tmin, "t-truncation (exact for t >= tmin)");
    c_las->add_option("--qmin", qmin, "q-truncation (exact for q >= qmin)");
    c_las->add_option("--kmax", kmax, "summation safety bound");

    std::string file, to = "Kh";
    int writhe = 0;
    auto* c_cv = app.add_subcommand("convert", "re-index a stored result");
    add_output_opts(c_cv, o);
    c_cv->add_option("--in", file, "input JSON file (default stdin)");
    c_cv->add_option("--to", to, "target convention")
        ->check(CLI::IsMember({"Kh", "KhBar", "KhR2", "KhR2framed"}));
    c_cv->add_option("--writhe", writhe, "writhe for the framed convention");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_kh->parsed()) return cmd_kh(o);
        if (c_col->parsed()) return cmd_colored(o, colors, method);
        if (c_sw->parsed()) return cmd_sweep(o, color, window);
        if (c_rec->parsed()) return cmd_recursion(o, maxn);
        if (c_las->parsed()) return cmd_lasagna(o, parity, tmin, qmin, kmax);
        if (c_cv->parsed()) return cmd_convert(o, file, to, writhe);
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
