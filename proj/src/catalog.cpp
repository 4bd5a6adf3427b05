#include "rkato/catalog.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace rkato {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char d) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, d)) out.push_back(cur);
    return out;
}

using KV = std::map<std::string, std::string>;

KV parse_kv(const std::string& s) {
    KV kv;
    for (const auto& item : split(s, ';')) {
        std::string t = trim(item);
        if (t.empty()) continue;
        size_t eq = t.find('=');
        require(eq != std::string::npos, "expected key=value, got '" + t + "'");
        kv[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
    }
    return kv;
}

void check_keys(const KV& kv, std::initializer_list<const char*> allowed) {
    for (const auto& [k, v] : kv) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || (k == a);
        require(ok, "unknown key '" + k + "'");
    }
}

std::string get(const KV& kv, const std::string& key, const char* def = nullptr) {
    auto it = kv.find(key);
    if (it != kv.end()) return it->second;
    require(def != nullptr, "missing required key '" + key + "'");
    return def;
}

bool has(const KV& kv, const std::string& key) { return kv.count(key) > 0; }

double double_of(const std::string& s, const std::string& what) {
    size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        fail("bad number '" + s + "' for " + what);
    }
    require(pos == s.size(), "bad number '" + s + "' for " + what);
    return v;
}

int int_of(const std::string& s, const std::string& what) {
    size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        fail("bad integer '" + s + "' for " + what);
    }
    require(pos == s.size(), "bad integer '" + s + "' for " + what);
    return v;
}

std::vector<int> ints_of(const std::string& s, const std::string& what) {
    std::vector<int> out;
    for (const auto& item : split(s, ',')) out.push_back(int_of(trim(item), what));
    return out;
}

RVec doubles_of(const std::string& s, const std::string& what) {
    auto items = split(s, ',');
    RVec out(items.size());
    for (size_t i = 0; i < items.size(); ++i)
        out[static_cast<Eigen::Index>(i)] = double_of(trim(items[i]), what);
    return out;
}

Mask mask_of(const std::string& s, int n, const std::string& what) {
    Mask m = 0;
    for (int i : ints_of(s, what)) {
        require(i >= 1 && i <= n, what + ": index " + std::to_string(i) + " out of range");
        require(!blade_contains(m, i), what + ": repeated index " + std::to_string(i));
        m |= blade_bit(i);
    }
    return m;
}

FormField build_entry(const std::string& name, const std::string& family, const KV& params,
                      const std::string& alpha_col, const KV& domain) {
    FormField f;
    int n = int_of(get(params, "n"), "n");
    if (family == "grad_poly") {
        check_keys(params, {"n", "poly", "attain", "expect_violation"});
        f = gradient_field(name, potential_preset(get(params, "poly"), n));
    } else if (family == "trig_exp") {
        check_keys(params, {"n", "a", "b", "attain"});
        RVec a = doubles_of(get(params, "a"), "a");
        RVec b = doubles_of(get(params, "b"), "b");
        require(a.size() == n && b.size() == n, "a and b must have n entries");
        f = trig_exp_field(name, a, b);
    } else if (family == "const_blade") {
        check_keys(params, {"n", "blade"});
        f = constant_blade_field(name, n, mask_of(get(params, "blade"), n, "blade"));
    } else if (family == "holo_mono") {
        check_keys(params, {"n", "exps", "blade", "attain"});
        std::vector<int> exps = ints_of(get(params, "exps"), "exps");
        require(static_cast<int>(exps.size()) == n, "exps must have n entries");
        f = holomorphic_field(name, n, exps, mask_of(get(params, "blade"), n, "blade"));
    } else if (family == "const_bideg") {
        check_keys(params, {"n", "pblade", "qblade"});
        f = constant_bidegree_field(name, n, mask_of(get(params, "pblade"), n, "pblade"),
                                    mask_of(get(params, "qblade"), n, "qblade"));
    } else {
        fail("unknown family '" + family + "'");
    }

    std::string ac = trim(alpha_col);
    if (ac == "parallel")
        f.parallel_expected = true;
    else
        f.expected_alpha = double_of(ac, "expected_alpha");

    if (has(params, "attain")) {
        RVec at = doubles_of(get(params, "attain"), "attain");
        require(at.size() == f.ambient_dim(), "attain point has wrong dimension");
        f.attain = at;
    }
    if (has(params, "expect_violation"))
        f.expect_violation = int_of(get(params, "expect_violation"), "expect_violation") != 0;

    check_keys(domain, {"box", "pts", "jitter"});
    f.grid.half_width = double_of(get(domain, "box", "2"), "box");
    f.grid.points_per_axis = int_of(get(domain, "pts", "0"), "pts");
    f.grid.jitter_points = int_of(get(domain, "jitter", "0"), "jitter");
    return f;
}

}  // namespace

Polynomial potential_preset(const std::string& name, int n) {
    require(n >= 1, "potential preset: n must be positive");
    auto x = [n](int i) { return Polynomial::variable(n, i); };
    if (name == "quad_axial") {
        // ((n-1) x_1^2 - x_2^2 - .. - x_n^2)/2: half-integer coefficients keep
        // the laplacian exactly zero; harmonic, bound attained at e_1.
        require(n >= 2, "quad_axial needs n >= 2");
        Polynomial p = (x(0) * x(0)).scaled(0.5 * (n - 1));
        for (int i = 1; i < n; ++i) p = p - (x(i) * x(i)).scaled(0.5);
        return p;
    }
    if (name == "planar_cubic") {
        require(n >= 2, "planar_cubic needs n >= 2");
        return x(0) * x(0) * x(0) - (x(0) * x(1) * x(1)).scaled(3.0);
    }
    if (name == "planar_quartic") {
        require(n >= 2, "planar_quartic needs n >= 2");
        return x(0) * x(0) * x(0) * x(0) - (x(0) * x(0) * x(1) * x(1)).scaled(6.0) +
               x(1) * x(1) * x(1) * x(1);
    }
    if (name == "xy") {
        require(n >= 2, "xy needs n >= 2");
        return x(0) * x(1);
    }
    if (name == "half_sq") {
        // Not harmonic: gradient x_1 dx_1 is the bound-violation control.
        return (x(0) * x(0)).scaled(0.5);
    }
    fail("unknown potential preset '" + name + "'");
}

std::vector<FormField> parse_catalog(const std::string& text) {
    std::vector<FormField> out;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        try {
            auto cols = split(line, '|');
            require(cols.size() == 5, "expected 5 '|' separated columns");
            out.push_back(build_entry(trim(cols[0]), trim(cols[1]), parse_kv(cols[2]),
                                      trim(cols[3]), parse_kv(cols[4])));
        } catch (const std::exception& e) {
            fail("field catalog line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::vector<FormField> load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "cannot open field catalog '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_catalog(ss.str());
}

const std::string& default_catalog_text() {
    static const std::string text = R"(# Field catalog: name | family | params | expected_alpha | domain
# expected_alpha is the refined-bound constant for the entry's declared
# operator family, or the word 'parallel' for covariant-constant fields.
# params:  n=<dim>, then per family: poly=<preset> | a=,b= | blade= | exps=,blade= | pblade=,qblade=
#          attain=<point> marks where the bound is attained; expect_violation=1 marks controls.
# domain:  box=<half width>; pts=<points per axis, 0 = default>; jitter=<extra seeded points>

quad_grad_r3      | grad_poly   | n=3; poly=quad_axial; attain=1,0,0          | 0.8164965809277260 | box=2; pts=21; jitter=8
quad_grad_r4      | grad_poly   | n=4; poly=quad_axial; attain=1,0,0,0        | 0.8660254037844386 | box=2; pts=9
quad_grad_r5      | grad_poly   | n=5; poly=quad_axial; attain=1,0,0,0,0      | 0.8944271909999159 | box=2; pts=7
quad_grad_r6      | grad_poly   | n=6; poly=quad_axial; attain=1,0,0,0,0,0    | 0.9128709291752769 | box=2; pts=5
planar_cubic_r3   | grad_poly   | n=3; poly=planar_cubic                      | 0.8164965809277260 | box=2; pts=21
planar_cubic_r4   | grad_poly   | n=4; poly=planar_cubic                      | 0.8660254037844386 | box=2; pts=9
planar_quartic_r3 | grad_poly   | n=3; poly=planar_quartic                    | 0.8164965809277260 | box=2; pts=21
xy_grad_r3        | grad_poly   | n=3; poly=xy                                | 0.8164965809277260 | box=2; pts=21
trig_exp_r2       | trig_exp    | n=2; a=1,0; b=0,1; attain=0,0               | 0.7071067811865476 | box=2; pts=21
trig_exp_r3       | trig_exp    | n=3; a=1,0,0; b=0,1,0                       | 0.8164965809277260 | box=2; pts=21
trig_exp_r4       | trig_exp    | n=4; a=1,1,0,0; b=0,0,1,1                   | 0.8660254037844386 | box=1.5; pts=9
const_blade_r3    | const_blade | n=3; blade=1,3                              | parallel           | box=2; pts=5
holo_z1_c1        | holo_mono   | n=1; exps=1; blade=1; attain=1,0.5          | 0.7071067811865476 | box=2; pts=21
holo_z1sq_c1      | holo_mono   | n=1; exps=2; blade=1; attain=1,0.5          | 0.7071067811865476 | box=2; pts=21
holo_z2dz1_c2     | holo_mono   | n=2; exps=0,1; blade=1; attain=1,1,0.5,-0.5 | 0.7071067811865476 | box=1.5; pts=7
holo_vol_c2       | holo_mono   | n=2; exps=1,0; blade=1,2; attain=1,1,0.5,-0.5 | 0.7071067811865476 | box=1.5; pts=7
holo_z3_c3_p2     | holo_mono   | n=3; exps=0,0,1; blade=1,2; attain=0.5,0.5,1,0.5,-0.5,0.25 | 0.7071067811865476 | box=1; pts=5
const_bideg_c2    | const_bideg | n=2; pblade=1; qblade=2                     | parallel           | box=1; pts=5
stretch_ctrl_r3   | grad_poly   | n=3; poly=half_sq; expect_violation=1       | 0.8164965809277260 | box=2; pts=21
)";
    return text;
}

}  // namespace rkato
