#include "thetagrp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "thetagrp/errors.hpp"
#include "thetagrp/heisenberg.hpp"
#include "thetagrp/lattice.hpp"

namespace thetagrp::cli {

namespace {

// Usage problems detected after CLI11 parsing (missing flag combinations, bad syntax).
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

Json big_to_json(const Int& v)
{
    if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
    return Json(v.get_str());
}

Json factors_json(const group::AbGroupStructure& s)
{
    Json a = Json::array();
    for (std::int64_t d : s.invariant_factors) a.push_back(d);
    return a;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

std::string strip(std::string s)
{
    auto sp = [](unsigned char c) { return std::isspace(c) != 0; };
    s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), sp));
    s.erase(std::find_if_not(s.rbegin(), s.rend(), sp).base(), s.end());
    return s;
}

IntVector parse_int_list(const std::string& flag, const std::string& text)
{
    IntVector out;
    for (std::string item : split(text, ',')) {
        item = strip(item);
        Int v;
        if (item.empty() || v.set_str(item, 10) != 0)
            throw UsageError(flag + ": malformed integer '" + item + "' in '" + text + "'");
        out.push_back(v);
    }
    if (out.empty()) throw UsageError(flag + ": empty list");
    return out;
}

std::vector<std::int64_t> parse_small_list(const std::string& flag, const std::string& text)
{
    std::vector<std::int64_t> out;
    for (const Int& v : parse_int_list(flag, text)) {
        if (!v.fits_slong_p()) throw UsageError(flag + ": value out of range");
        out.push_back(v.get_si());
    }
    return out;
}

std::string vector_str(const IntVector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

Json vector_json(const IntVector& v)
{
    Json a = Json::array();
    for (const Int& c : v) a.push_back(big_to_json(c));
    return a;
}

void print_report(const inv::ThetaReport& r, bool json, std::ostream& out)
{
    if (json) {
        out << report_to_json(r).dump() << '\n';
        return;
    }
    const auto& in = r.input;
    out << "family          " << inv::to_string(in.family) << '\n';
    if (in.family == inv::Family::KUM) out << "n               " << in.n << '\n';
    out << "div             " << in.div << '\n';
    out << (in.family == inv::Family::RANK4_KUM2 ? "e               " : "q               ") << in.q
        << '\n';
    if (r.a) out << "a               " << *r.a << '\n';
    if (r.div0) out << "div0            " << *r.div0 << '\n';
    if (r.m) out << "m               " << *r.m << '\n';
    out << "cokernel        " << r.cokernel.str() << '\n';
    out << "is_heisenberg   " << (r.is_heisenberg ? "true" : "false") << '\n';
    if (r.h0) out << "h0              " << r.h0->get_str() << '\n';
    if (r.multiplicity) out << "multiplicity    " << r.multiplicity->get_str() << '\n';
}

Json gpm_json(const heis::GenPermMatrix& M)
{
    Json j;
    j["dim"] = M.dim;
    Json perm = Json::array(), phases = Json::array();
    for (std::size_t y = 0; y < M.dim; ++y) {
        perm.push_back(M.perm[y]);
        phases.push_back(M.phases[y].str());
    }
    j["perm"] = perm;
    j["phases"] = phases;
    return j;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

Json report_to_json(const inv::ThetaReport& r)
{
    Json j;
    const auto& in = r.input;
    j["family"] = inv::to_string(in.family);
    if (in.family == inv::Family::KUM) j["n"] = in.n;
    j["div"] = in.div;
    j["q"] = in.q;
    if (r.a) j["a"] = *r.a;
    if (r.div0) j["div0"] = *r.div0;
    if (r.m) j["m"] = *r.m;
    j["cokernel"] = factors_json(r.cokernel);
    j["is_heisenberg"] = r.is_heisenberg;
    if (r.h0) j["h0"] = big_to_json(*r.h0);
    if (r.multiplicity) j["multiplicity"] = big_to_json(*r.multiplicity);
    return j;
}

group::Pairing pairing_from_json(const Json& doc)
{
    require(doc.is_object(), "pairing file: expected an object");
    require(doc.contains("orders") && doc["orders"].is_array(), "pairing file: missing 'orders' array");
    require(doc.contains("matrix") && doc["matrix"].is_array(), "pairing file: missing 'matrix' array");
    std::vector<std::int64_t> orders;
    for (const auto& o : doc["orders"]) {
        require(o.is_number_integer(), "pairing file: orders must be integers");
        orders.push_back(o.get<std::int64_t>());
    }
    std::vector<std::vector<QmodZ>> m;
    for (const auto& row : doc["matrix"]) {
        require(row.is_array(), "pairing file: matrix rows must be arrays");
        std::vector<QmodZ> r;
        for (const auto& v : row) {
            require(v.is_string(), "pairing file: matrix entries must be \"num/den\" strings");
            r.push_back(QmodZ::parse(v.get<std::string>()));
        }
        m.push_back(std::move(r));
    }
    return group::Pairing(group::FinAbGroup(std::move(orders)), std::move(m));
}

Json pairing_to_json(const group::Pairing& P)
{
    Json j;
    j["orders"] = P.group().orders();
    Json m = Json::array();
    for (const auto& row : P.matrix()) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(v.str());
        m.push_back(r);
    }
    j["matrix"] = m;
    return j;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Theta-group invariants of line bundles on Kummer and OG6 type manifolds",
                 "thetagrp"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Emit machine-readable JSON");

    // kummer
    auto* kummer = app.add_subcommand("kummer", "Kum_n line bundle from (div, q) or from a class");
    std::optional<std::int64_t> k_n, k_div, k_q, k_a1, k_a2, k_x;
    kummer->add_option("--n", k_n, "Half the dimension (n >= 2)")->required();
    kummer->add_option("--div", k_div, "Divisibility");
    kummer->add_option("--q", k_q, "BBF square (even)");
    kummer->add_option("--a1", k_a1, "First elementary divisor of l");
    kummer->add_option("--a2", k_a2, "Second elementary divisor of l (a1 | a2)");
    kummer->add_option("--x", k_x, "Coefficient of delta_n");
    kummer->add_flag("--json", json);

    // og6
    auto* og6 = app.add_subcommand("og6", "OG6 line bundle");
    std::int64_t o_div = 0, o_q = 0;
    og6->add_option("--div", o_div, "Divisibility (1 or 2)")->required();
    og6->add_option("--q", o_q, "BBF square (even)")->required();
    og6->add_flag("--json", json);

    // rank4
    auto* rank4 = app.add_subcommand("rank4", "Rank-4 modular bundle on a Kummer fourfold");
    std::int64_t r_e = 0;
    rank4->add_option("--e", r_e, "q_M(h), positive and -6 mod 16")->required();
    rank4->add_flag("--json", json);

    // lattice
    auto* lat = app.add_subcommand("lattice", "Lattice invariants of a vector");
    std::string l_op, l_name, l_vec, l_other;
    lat->add_option("op", l_op, "div | q | class | orbit")
        ->required()
        ->check(CLI::IsMember({"div", "q", "class", "orbit"}));
    lat->add_option("--lattice", l_name, "kum:<n> or og6")->required();
    lat->add_option("--vector", l_vec, "Comma-separated coordinates in basis order")->required();
    lat->add_flag("--json", json);

    // pairing
    auto* pair = app.add_subcommand("pairing", "Kernel / cokernel of a pairing file");
    std::string p_op, p_file;
    bool p_oracle = false;
    pair->add_option("op", p_op, "cokernel | radical | nondeg")
        ->required()
        ->check(CLI::IsMember({"cokernel", "radical", "nondeg"}));
    pair->add_option("--file", p_file, "Pairing JSON file")->required();
    pair->add_flag("--oracle", p_oracle, "Use the brute-force enumeration path");
    pair->add_flag("--json", json);

    // heisenberg
    auto* heis_cmd = app.add_subcommand("heisenberg", "Heisenberg group H(d) computations");
    std::string h_op, h_d, h_a, h_b;
    heis_cmd->add_option("op", h_op, "commutator | mul | pairing | norm")
        ->required()
        ->check(CLI::IsMember({"commutator", "mul", "pairing", "norm"}));
    heis_cmd->add_option("--d", h_d, "Comma-separated d_i")->required();
    heis_cmd->add_option("--a", h_a, "Element t/u;(x..);(f..)");
    heis_cmd->add_option("--b", h_b, "Element t/u;(x..);(f..)");
    heis_cmd->add_flag("--json", json);

    // schrodinger
    auto* schr = app.add_subcommand("schrodinger", "Schroedinger representation matrices");
    std::string s_op, s_d, s_elem;
    std::optional<std::int64_t> s_dim;
    schr->add_option("op", s_op, "matrix | multiplicity")
        ->required()
        ->check(CLI::IsMember({"matrix", "multiplicity"}));
    schr->add_option("--d", s_d, "Comma-separated d_i")->required();
    schr->add_option("--elem", s_elem, "Element t/u;(x..);(f..)");
    schr->add_option("--dim", s_dim, "Representation dimension (for multiplicity)");
    schr->add_flag("--json", json);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Run the invariants property suites");
    sweep->add_flag("--json", json);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (kummer->parsed()) {
            const bool by_inv = k_div || k_q;
            const bool by_class = k_a1 || k_a2 || k_x;
            if (by_inv == by_class)
                throw UsageError("kummer: give either --div and --q, or --a1, --a2 and --x");
            if (by_inv) {
                if (!k_div) throw UsageError("kummer: missing --div");
                if (!k_q) throw UsageError("kummer: missing --q");
                print_report(inv::theta_report(inv::LineBundleInvariants::kum(*k_n, *k_div, *k_q)),
                             json, out);
            } else {
                if (!k_a1) throw UsageError("kummer: missing --a1");
                if (!k_a2) throw UsageError("kummer: missing --a2");
                if (!k_x) throw UsageError("kummer: missing --x");
                print_report(inv::theta_report_from_class(*k_n, *k_a1, *k_a2, *k_x), json, out);
            }
        } else if (og6->parsed()) {
            print_report(inv::theta_report(inv::LineBundleInvariants::og6(o_div, o_q)), json, out);
        } else if (rank4->parsed()) {
            print_report(inv::theta_report(inv::LineBundleInvariants::rank4(r_e)), json, out);
        } else if (lat->parsed()) {
            const lattice::GramLattice L = lattice::lattice_by_name(l_name);
            const IntVector v = parse_int_list("--vector", l_vec);
            if (l_op == "div") {
                const Int d = lattice::divisibility(L, v);
                if (json) out << Json{{"divisibility", big_to_json(d)}}.dump() << '\n';
                else out << d.get_str() << '\n';
            } else if (l_op == "q") {
                const Int q = lattice::square(L, v);
                if (json) out << Json{{"q", big_to_json(q)}}.dump() << '\n';
                else out << q.get_str() << '\n';
            } else if (l_op == "class") {
                require(l_name == "og6", "lattice class: only defined for og6");
                const std::string c = lattice::to_string(lattice::og6_class(v));
                if (json) out << Json{{"class", c}}.dump() << '\n';
                else out << c << '\n';
            } else {
                require(l_name.rfind("kum:", 0) == 0, "lattice orbit: only defined for kum:<n>");
                const std::int64_t n = std::stoll(l_name.substr(4));
                const lattice::OrbitInvariant o = lattice::kum_orbit_split(n, v);
                if (json) {
                    Json j;
                    j["x0"] = big_to_json(o.x0);
                    j["p"] = big_to_json(o.p);
                    j["q"] = big_to_json(o.q);
                    j["beta"] = vector_json(o.beta);
                    j["e"] = vector_json(o.e);
                    j["f"] = vector_json(o.f);
                    out << j.dump() << '\n';
                } else {
                    out << "x0    " << o.x0.get_str() << '\n'
                        << "p     " << o.p.get_str() << '\n'
                        << "q     " << o.q.get_str() << '\n'
                        << "beta  " << vector_str(o.beta) << '\n'
                        << "e     " << vector_str(o.e) << '\n'
                        << "f     " << vector_str(o.f) << '\n';
                }
            }
        } else if (pair->parsed()) {
            Json doc;
            try {
                doc = Json::parse(read_file(p_file));
            } catch (const Json::parse_error& e) {
                throw DomainError("pairing file '" + p_file + "': " + e.what());
            }
            const group::Pairing P = pairing_from_json(doc);
            if (p_op == "nondeg") {
                const bool nd = p_oracle ? group::brute_cokernel(P).is_trivial()
                                         : group::is_nondegenerate(P);
                if (json) out << Json{{"nondegenerate", nd}}.dump() << '\n';
                else out << (nd ? "true" : "false") << '\n';
            } else {
                group::AbGroupStructure s;
                if (p_op == "cokernel")
                    s = p_oracle ? group::brute_cokernel(P) : group::pairing_cokernel(P);
                else
                    s = group::pairing_radical(P);
                if (json) out << Json{{p_op, factors_json(s)}}.dump() << '\n';
                else out << s.str() << '\n';
            }
        } else if (heis_cmd->parsed()) {
            const heis::HeisenbergGroup H(parse_small_list("--d", h_d));
            auto need = [&](const std::string& flag, const std::string& v) {
                if (v.empty()) throw UsageError("heisenberg " + h_op + ": missing " + flag);
                return heis::parse_elem(H, v);
            };
            if (h_op == "commutator") {
                const QmodZ c = heis::h_commutator(H, need("--a", h_a), need("--b", h_b));
                if (json) out << Json{{"commutator", c.str()}}.dump() << '\n';
                else out << c.str() << '\n';
            } else if (h_op == "mul") {
                const heis::HeisElem p = heis::h_mul(H, need("--a", h_a), need("--b", h_b));
                if (json) out << Json{{"product", heis::format_elem(p)}}.dump() << '\n';
                else out << heis::format_elem(p) << '\n';
            } else if (h_op == "pairing") {
                const group::Pairing P = heis::heis_pairing(H.d());
                if (json) out << pairing_to_json(P).dump() << '\n';
                else out << pairing_to_json(P).dump(2) << '\n';
            } else {
                const mpq_class r = heis::character_norm(H.d());
                if (json) out << Json{{"character_norm", r.get_str()}}.dump() << '\n';
                else out << r.get_str() << '\n';
            }
        } else if (schr->parsed()) {
            const heis::HeisenbergGroup H(parse_small_list("--d", s_d));
            if (s_op == "matrix") {
                if (s_elem.empty()) throw UsageError("schrodinger matrix: missing --elem");
                const heis::GenPermMatrix M = heis::schrodinger_matrix(H, heis::parse_elem(H, s_elem));
                if (json) {
                    out << gpm_json(M).dump() << '\n';
                } else {
                    for (std::size_t y = 0; y < M.dim; ++y)
                        out << "col " << y << " -> row " << M.perm[y] << "  phase " << M.phases[y].str()
                            << '\n';
                }
            } else {
                if (!s_dim) throw UsageError("schrodinger multiplicity: missing --dim");
                const std::int64_t k = heis::schrodinger_multiplicity(*s_dim, H.d());
                if (json) out << Json{{"multiplicity", k}}.dump() << '\n';
                else out << k << '\n';
            }
        } else if (sweep->parsed()) {
            const auto results = inv::run_sweeps();
            bool all_ok = true;
            Json arr = Json::array();
            for (const auto& r : results) {
                all_ok = all_ok && r.ok();
                if (json) {
                    Json j;
                    j["name"] = r.name;
                    j["passed"] = r.passed;
                    j["failed"] = r.failed;
                    if (!r.ok()) j["first_failure"] = r.first_failure;
                    arr.push_back(j);
                } else {
                    out << (r.ok() ? "PASS  " : "FAIL  ") << r.name << "  (" << r.passed << " passed, "
                        << r.failed << " failed)";
                    if (!r.ok()) out << "  first failure: " << r.first_failure;
                    out << '\n';
                }
            }
            if (json) out << arr.dump() << '\n';
            return all_ok ? kOk : kDomainError;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kDomainError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
    return kOk;
}

} // namespace thetagrp::cli
