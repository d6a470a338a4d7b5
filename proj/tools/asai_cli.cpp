#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include <asai/arith.hpp>
#include <asai/charlattice.hpp>
#include <asai/errors.hpp>
#include <asai/lfactor.hpp>
#include <asai/oracle.hpp>
#include <asai/padic.hpp>

using json = nlohmann::ordered_json;
using namespace asai;

namespace {

json json_int(const mpz_class& v) {
    static const mpz_class limit("9007199254740992");
    if (v >= -limit && v <= limit) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

std::string scalar_str(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
}

std::string join_values(const json& arr, const char* sep) {
    std::ostringstream os;
    bool first = true;
    for (const auto& v : arr) {
        if (!first) os << sep;
        first = false;
        os << scalar_str(v);
    }
    return os.str();
}

void render_object(const json& j, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << j.dump(2) << '\n';
        return;
    }
    if (format == "text") {
        for (const auto& [key, val] : j.items()) {
            if (val.is_array() && !val.empty() && val.front().is_object()) {
                out << key << ":\n";
                for (const auto& row : val) {
                    out << "  -";
                    for (const auto& [k, v] : row.items()) out << ' ' << k << '=' << scalar_str(v);
                    out << '\n';
                }
            } else if (val.is_array()) {
                out << key << ": " << join_values(val, ", ") << '\n';
            } else {
                out << key << ": " << scalar_str(val) << '\n';
            }
        }
        return;
    }
    std::vector<std::pair<std::string, json>> tables;
    std::vector<std::pair<std::string, std::string>> flat;
    for (const auto& [key, val] : j.items()) {
        if (val.is_array() && !val.empty() && val.front().is_object()) {
            tables.emplace_back(key, val);
        } else if (val.is_array()) {
            flat.emplace_back(key, join_values(val, ";"));
        } else {
            flat.emplace_back(key, scalar_str(val));
        }
    }
    if (format == "csv") {
        bool first = true;
        for (const auto& [k, v] : flat) {
            out << (first ? "" : ",") << k;
            first = false;
        }
        out << '\n';
        first = true;
        for (const auto& [k, v] : flat) {
            out << (first ? "" : ",") << v;
            first = false;
        }
        out << '\n';
        for (const auto& [key, table] : tables) {
            out << '\n' << key << '\n';
            bool head = true;
            for (const auto& row : table) {
                if (head) {
                    bool f = true;
                    for (const auto& [k, v] : row.items()) {
                        out << (f ? "" : ",") << k;
                        f = false;
                    }
                    out << '\n';
                    head = false;
                }
                bool f = true;
                for (const auto& [k, v] : row.items()) {
                    out << (f ? "" : ",") << scalar_str(v);
                    f = false;
                }
                out << '\n';
            }
        }
        return;
    }
    // md
    out << "| key | value |\n| --- | --- |\n";
    for (const auto& [k, v] : flat) out << "| " << k << " | " << v << " |\n";
    for (const auto& [key, table] : tables) {
        out << "\n### " << key << "\n\n";
        bool head = true;
        for (const auto& row : table) {
            if (head) {
                out << '|';
                for (const auto& [k, v] : row.items()) out << ' ' << k << " |";
                out << "\n|";
                for (const auto& [k, v] : row.items()) {
                    (void)k;
                    (void)v;
                    out << " --- |";
                }
                out << '\n';
                head = false;
            }
            out << '|';
            for (const auto& [k, v] : row.items()) out << ' ' << scalar_str(v) << " |";
            out << '\n';
        }
    }
}

void render_table(const json& rows, const std::string& format, std::ostream& out) {
    if (rows.empty()) return;
    if (format == "md") {
        bool head = true;
        for (const auto& row : rows) {
            if (head) {
                out << '|';
                for (const auto& [k, v] : row.items()) out << ' ' << k << " |";
                out << "\n|";
                for (const auto& [k, v] : row.items()) {
                    (void)k;
                    (void)v;
                    out << " --- |";
                }
                out << '\n';
                head = false;
            }
            out << '|';
            for (const auto& [k, v] : row.items()) out << ' ' << scalar_str(v) << " |";
            out << '\n';
        }
        return;
    }
    // csv and text share the comma layout for scans
    bool head = true;
    for (const auto& row : rows) {
        if (head) {
            bool f = true;
            for (const auto& [k, v] : row.items()) {
                out << (f ? "" : ",") << k;
                f = false;
            }
            out << '\n';
            head = false;
        }
        bool f = true;
        for (const auto& [k, v] : row.items()) {
            out << (f ? "" : ",") << scalar_str(v);
            f = false;
        }
        out << '\n';
    }
}

struct DatumFlags {
    std::string qo = "3";
    unsigned long n = 1;
    unsigned long e_ffo = 1;
    unsigned long e_ef = 1;
    unsigned long f_ef = 1;
    unsigned long e_sigma = 1;
    bool supercuspidal = false;
    bool distinguished = false;
    bool not_distinguished = false;
    std::string twist;
    std::string ell;
};

void add_datum_flags(CLI::App* cmd, DatumFlags& f) {
    cmd->add_option("--qo", f.qo, "residue field size of the base field")->required();
    cmd->add_option("--n", f.n, "degree of the representation")->required();
    cmd->add_option("--e-ffo", f.e_ffo, "ramification index e(F/F_o), 1 or 2");
    cmd->add_option("--e", f.e_ef, "ramification index e(E/F)");
    cmd->add_option("--f", f.f_ef, "residue degree f(E/F)");
    cmd->add_option("--e-sigma", f.e_sigma, "ramification index e(E/E_sigma), 1 or 2");
    cmd->add_flag("--supercuspidal", f.supercuspidal, "the mod-ell reduction stays supercuspidal");
    auto* dist = cmd->add_flag("--distinguished", f.distinguished, "distinguished (the default)");
    auto* ndist = cmd->add_flag("--not-distinguished", f.not_distinguished,
                                "not distinguished up to unramified twist");
    auto* tw = cmd->add_option("--twist", f.twist,
                               "unramified twist of a distinguished representation, as ORDER:EXPONENT");
    dist->excludes(ndist);
    dist->excludes(tw);
    ndist->excludes(tw);
}

lfactor::RootOfUnity parse_twist(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == s.size())
        throw std::invalid_argument("twist must have the form ORDER:EXPONENT");
    return lfactor::RootOfUnity(mpz_class(s.substr(0, colon)), mpz_class(s.substr(colon + 1)));
}

padic::CuspidalDatum to_datum(const DatumFlags& f) {
    padic::CuspidalDatum d;
    d.q_o = mpz_class(f.qo);
    d.n = f.n;
    d.e_ffo = f.e_ffo;
    d.e_ef = f.e_ef;
    d.f_ef = f.f_ef;
    d.e_sigma = f.e_sigma;
    d.supercuspidal = f.supercuspidal;
    if (f.not_distinguished) {
        d.distinction = padic::Distinction::NotDistinguishedUpToUnramifiedTwist;
    } else if (!f.twist.empty()) {
        d.distinction = padic::Distinction::TwistOfDistinguished;
        d.twist = parse_twist(f.twist);
    } else {
        d.distinction = padic::Distinction::Distinguished;
    }
    return d;
}

std::vector<padic::Violation> check_datum(const padic::CuspidalDatum& d,
                                          const std::optional<mpz_class>& ell) {
    std::vector<padic::Violation> out;
    if (ell) {
        if (*ell < 2 || !arith::is_probable_prime(*ell) || d.q_o % *ell == 0) {
            out.push_back({"ell-coprime", "ell must be a prime not dividing q_o"});
            auto rest = padic::validate(d, std::nullopt);
            out.insert(out.end(), rest.begin(), rest.end());
            return out;
        }
    }
    return padic::validate(d, ell);
}

int report_violations(const std::vector<padic::Violation>& vio, const std::string& format,
                      std::ostream& out) {
    json j;
    json rows = json::array();
    for (const auto& v : vio) rows.push_back({{"rule", v.rule}, {"message", v.message}});
    j["violations"] = rows;
    render_object(j, format == "csv" || format == "md" ? format : (format == "json" ? "json" : "text"),
                  out);
    return 2;
}

int cmd_invariants(const DatumFlags& f, const std::string& format, std::ostream& out) {
    auto d = to_datum(f);
    mpz_class ell(f.ell);
    auto vio = check_datum(d, ell);
    if (!vio.empty()) return report_violations(vio, format, out);

    unsigned long eo = padic::e_o(d);
    unsigned long big_n = d.n / eo;
    auto orders = padic::x_o_orders(d, ell);
    json j;
    j["e_o"] = eo;
    j["N"] = big_n;
    j["q_pow"] = json_int(arith::pow_ui(d.q_o, big_n));
    j["q_Eo"] = json_int(padic::q_Eo(d));
    j["banal"] = padic::is_banal(d, ell);
    j["rel_banal"] = padic::is_relatively_banal(d, ell);
    j["xo_char0"] = orders.char0;
    j["xo_modell"] = orders.mod_ell;
    j["xo_kernel"] = orders.kernel;
    render_object(j, format, out);
    return 0;
}

std::string compact_factor(const padic::CuspidalDatum& d, const mpz_class& characteristic,
                           const lfactor::EulerFactor& f) {
    if (f.roots.empty()) return "1";
    lfactor::RootOfUnity c = d.distinction == padic::Distinction::TwistOfDistinguished
                                 ? d.twist
                                 : lfactor::RootOfUnity();
    if (characteristic != 0) c = lfactor::prime_to_ell_part(c, characteristic);
    mpz_class deg = lfactor::total_multiplicity(f);
    std::ostringstream os;
    os << "1/(1 - ";
    if (c.is_identity()) {
        os << "X";
        if (deg != 1) os << "^" << deg;
    } else if (deg == 1) {
        os << lfactor::to_string(c) << " X";
    } else {
        os << "(" << lfactor::to_string(c) << " X)^" << deg;
    }
    os << ")";
    return os.str();
}

int cmd_lfactor(const DatumFlags& f, const std::string& char_str, const std::string& format,
                std::ostream& out) {
    auto d = to_datum(f);
    mpz_class ch(char_str);
    auto vio = check_datum(d, ch == 0 ? std::nullopt : std::optional<mpz_class>(ch));
    if (!vio.empty()) return report_violations(vio, format, out);

    auto fac = lfactor::asai_l_factor(d, ch);
    json roots = json::array();
    for (const auto& [root, mult] : fac.roots) {
        roots.push_back({{"order", json_int(root.order())},
                         {"exponent", json_int(root.exponent())},
                         {"multiplicity", json_int(mult)}});
    }
    json j;
    j["factor"] = compact_factor(d, ch, fac);
    j["characteristic"] = json_int(fac.characteristic);
    j["roots"] = roots;
    j["pole_order"] = json_int(lfactor::pole_order_at_one(fac));
    render_object(j, format, out);
    return 0;
}

int cmd_lifts(const std::string& qo, const std::string& q, unsigned long n, const std::string& ell,
              const std::string& theta, const std::string& dual, const std::string& format,
              std::ostream& out) {
    charlattice::FiniteSetting s = dual == "sigma"
                                       ? charlattice::FiniteSetting::galois_pair(mpz_class(qo), n)
                                       : charlattice::FiniteSetting::self_dual(mpz_class(q), n);
    auto ctx = charlattice::ell_context(s, mpz_class(ell));
    auto lifts = charlattice::enumerate_lifts(s, ctx, mpz_class(theta));
    json reps = json::array();
    for (const auto& r : lifts.representatives) reps.push_back(json_int(r));
    json j;
    j["modulus"] = json_int(s.modulus());
    j["case"] = charlattice::to_string(charlattice::classify_case(s, ctx));
    j["total"] = json_int(lifts.total);
    j["dual_count"] = json_int(lifts.dual_count);
    j["class_total"] = json_int(lifts.class_total);
    j["class_dual"] = json_int(lifts.class_dual);
    j["representatives"] = reps;
    render_object(j, format, out);
    return 0;
}

std::pair<unsigned long, unsigned long> parse_range(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == s.size())
        throw std::invalid_argument("range must have the form LO:HI");
    unsigned long lo = std::stoul(s.substr(0, colon));
    unsigned long hi = std::stoul(s.substr(colon + 1));
    return {lo, hi};
}

int cmd_scan(const std::string& qo_range, const std::string& n_range,
             const std::vector<std::string>& ell_set, const std::string& format, std::ostream& out) {
    auto [qo_lo, qo_hi] = parse_range(qo_range);
    auto [n_lo, n_hi] = parse_range(n_range);
    std::set<mpz_class> ells;
    for (const auto& e : ell_set) ells.insert(mpz_class(e));
    std::vector<mpz_class> qos;
    for (unsigned long q = qo_lo; q <= qo_hi; ++q) {
        mpz_class qz(q);
        if (arith::is_odd_prime_power(qz)) qos.push_back(qz);
    }
    if (ells.empty() || qos.empty() || n_lo > n_hi || n_lo == 0) {
        std::cerr << "scan needs a nonempty odd-prime-power range, degree range, and ell set\n";
        return 1;
    }

    json rows = json::array();
    json rejects = json::array();
    for (const auto& qo : qos) {
        for (unsigned long n = n_lo; n <= n_hi; ++n) {
            for (unsigned long e_ffo = 1; e_ffo <= 2; ++e_ffo) {
                for (unsigned long e_ef = 1; e_ef <= n; ++e_ef) {
                    for (unsigned long f_ef = 1; f_ef <= n; ++f_ef) {
                        if (n % (e_ef * f_ef) != 0) continue;
                        for (unsigned long e_sigma = 1; e_sigma <= 2; ++e_sigma) {
                            for (const auto& ell : ells) {
                                padic::CuspidalDatum d;
                                d.q_o = qo;
                                d.n = n;
                                d.e_ffo = e_ffo;
                                d.e_ef = e_ef;
                                d.f_ef = f_ef;
                                d.e_sigma = e_sigma;
                                auto vio = check_datum(d, ell);
                                json base;
                                base["q_o"] = json_int(qo);
                                base["n"] = n;
                                base["e_ffo"] = e_ffo;
                                base["e_ef"] = e_ef;
                                base["f_ef"] = f_ef;
                                base["e_sigma"] = e_sigma;
                                base["ell"] = json_int(ell);
                                if (!vio.empty()) {
                                    std::ostringstream tags;
                                    for (std::size_t i = 0; i < vio.size(); ++i)
                                        tags << (i ? ";" : "") << vio[i].rule;
                                    base["rules"] = tags.str();
                                    rejects.push_back(base);
                                    continue;
                                }
                                unsigned long eo = padic::e_o(d);
                                auto orders = padic::x_o_orders(d, ell);
                                auto fac = lfactor::asai_l_factor(d, ell);
                                auto period = lfactor::period_report(d, ell);
                                base["e_o"] = eo;
                                base["N"] = d.n / eo;
                                base["rel_banal"] = padic::is_relatively_banal(d, ell);
                                base["banal"] = padic::is_banal(d, ell);
                                base["xo_char0"] = orders.char0;
                                base["xo_modell"] = orders.mod_ell;
                                base["xo_kernel"] = orders.kernel;
                                base["pole_order"] = json_int(lfactor::pole_order_at_one(fac));
                                base["period_nonzero"] = period.nonzero;
                                rows.push_back(base);
                            }
                        }
                    }
                }
            }
        }
    }

    if (format == "json") {
        json j;
        j["rows"] = rows;
        j["rejects"] = rejects;
        out << j.dump(2) << '\n';
        return 0;
    }
    render_table(rows, format, out);
    if (!rejects.empty()) {
        out << (format == "md" ? "\n### rejects\n\n" : "\nrejects\n");
        render_table(rejects, format, out);
    }
    return 0;
}

int cmd_verify(unsigned long max_modulus, unsigned long threads, bool mutate,
               unsigned long euler_bound, const std::string& format, std::ostream& out) {
    oracle::OracleConfig cfg;
    cfg.max_modulus = max_modulus;
    cfg.threads = threads;
    cfg.mutate = mutate;
    cfg.euler_bound = euler_bound;
    auto rep = oracle::run_full_suite(cfg);
    json fails = json::array();
    for (const auto& f : rep.failures) {
        fails.push_back({{"rule", f.rule},
                         {"input", f.input},
                         {"expected", f.expected},
                         {"actual", f.actual}});
    }
    json j;
    j["pass"] = rep.pass();
    j["checked"] = static_cast<std::uint64_t>(rep.checked);
    j["skipped"] = static_cast<std::uint64_t>(rep.skipped);
    j["witness_count"] = static_cast<std::uint64_t>(rep.witness_count);
    j["witness"] = rep.witness;
    j["failures"] = fails;
    render_object(j, format, out);
    return rep.pass() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of cuspidal index lattices, lift classes, and Asai Euler factors"};
    app.require_subcommand(1);

    std::string format = "auto";
    std::string output;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"auto", "json", "csv", "md", "text"}));
    app.add_option("--output", output, "write the report to a file instead of stdout");

    DatumFlags inv_flags;
    auto* inv = app.add_subcommand("invariants", "numerical invariants of one cuspidal datum");
    add_datum_flags(inv, inv_flags);
    inv->add_option("--ell", inv_flags.ell, "coefficient characteristic")->required();

    DatumFlags lf_flags;
    std::string lf_char;
    auto* lfc = app.add_subcommand("lfactor", "Asai L-factor of one cuspidal datum");
    add_datum_flags(lfc, lf_flags);
    lfc->add_option("--char", lf_char, "coefficient characteristic, 0 or a prime")->required();

    std::string lift_qo, lift_q, lift_ell, lift_theta, lift_dual;
    unsigned long lift_n = 1;
    auto* lifts = app.add_subcommand("lifts", "lift census and classes of one character index");
    lifts->add_option("--qo", lift_qo, "residue size q_o for a sigma-paired setting");
    lifts->add_option("--q", lift_q, "residue size q for a self-dual setting");
    lifts->add_option("--n", lift_n, "degree")->required();
    lifts->add_option("--ell", lift_ell, "coefficient characteristic")->required();
    lifts->add_option("--theta", lift_theta, "character index")->required();
    lifts->add_option("--dual", lift_dual, "duality kind")
        ->required()
        ->check(CLI::IsMember({"sigma", "self"}));

    std::string scan_qo_range, scan_n_range;
    std::vector<std::string> scan_ells;
    auto* scan = app.add_subcommand("scan", "sweep cuspidal data over parameter ranges");
    scan->add_option("--qo-range", scan_qo_range, "inclusive q_o range LO:HI")->required();
    scan->add_option("--n-range", scan_n_range, "inclusive degree range LO:HI")->required();
    scan->add_option("--ell-set", scan_ells, "comma separated primes")->required()->delimiter(',');

    unsigned long ver_max_modulus = charlattice::kDefaultEnumerationBound;
    unsigned long ver_threads = std::max(1u, std::thread::hardware_concurrency());
    unsigned long ver_euler_bound = 24;
    bool ver_mutate = false;
    auto* verify = app.add_subcommand("verify", "run the full brute-force oracle suite");
    verify->add_option("--max-modulus", ver_max_modulus, "skip settings whose modulus exceeds this");
    verify->add_option("--threads", ver_threads, "worker threads for index sweeps");
    verify->add_option("--euler-bound", ver_euler_bound, "degree bound for the Euler arithmetic grid")
        ->group("");
    verify->add_flag("--mutate", ver_mutate, "inject a deliberate fault to prove the oracles can fail")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n' << "run with --help for usage\n";
        return 1;
    }

    if (format == "auto") format = scan->parsed() ? "csv" : "text";

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!output.empty()) {
        file.open(output);
        if (!file) {
            std::cerr << "cannot open output file " << output << '\n';
            return 1;
        }
        out = &file;
    }

    try {
        if (inv->parsed()) return cmd_invariants(inv_flags, format, *out);
        if (lfc->parsed()) return cmd_lfactor(lf_flags, lf_char, format, *out);
        if (lifts->parsed()) {
            bool sigma = lift_dual == "sigma";
            if ((sigma && lift_qo.empty()) || (!sigma && lift_q.empty())) {
                std::cerr << (sigma ? "--dual sigma needs --qo\n" : "--dual self needs --q\n");
                return 1;
            }
            return cmd_lifts(lift_qo, lift_q, lift_n, lift_ell, lift_theta, lift_dual, format, *out);
        }
        if (scan->parsed()) return cmd_scan(scan_qo_range, scan_n_range, scan_ells, format, *out);
        if (verify->parsed())
            return cmd_verify(ver_max_modulus, ver_threads, ver_mutate, ver_euler_bound, format, *out);
    } catch (const DualityViolation& e) {
        std::cerr << "duality violation: " << e.what() << '\n';
        return 3;
    } catch (const CrossCheckError& e) {
        std::cerr << "cross-check failure: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "bad argument: " << e.what() << '\n';
        return 1;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
