// Command-line front end: fixed point enumeration, tangent classes,
// generating series, partition functions and the modular checks, with
// JSON or plain-text output.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "bow/brane.hpp"
#include "bow/eyd.hpp"
#include "bow/json_io.hpp"
#include "bow/kclass.hpp"
#include "bow/maya.hpp"
#include "bow/modular.hpp"
#include "bow/nekrasov.hpp"
#include "bow/series.hpp"
#include "bow/tangent.hpp"

namespace {

using bow::i64;

std::vector<i64> parse_int_list(const std::string& s) {
    std::vector<i64> out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (cur.empty()) throw CLI::ValidationError("empty entry in integer list");
            out.push_back(std::stoll(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

void require_margins(const std::vector<i64>& e, const std::vector<i64>& f) {
    i64 se = 0, sf = 0;
    for (i64 x : e) se += x;
    for (i64 x : f) sf += x;
    if (se != sf)
        throw CLI::ValidationError("margin mismatch: sum e = " + std::to_string(se) +
                                   ", sum f = " + std::to_string(sf));
}

bow::CellSign parse_sign(const std::string& s) {
    if (s == "minus" || s == "-") return bow::CellSign::minus;
    if (s == "plus" || s == "+") return bow::CellSign::plus;
    throw CLI::ValidationError("sign must be 'minus' or 'plus'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bow: exact combinatorics of affine type-A bow varieties"};
    app.require_subcommand(1);

    std::string e_str, f_str, sign_str = "minus", format = "text", a_str, mcase = "321";
    std::string eps1_str = "1", eps2_str = "1/2", moves;
    i64 d = 0, order = 8, s_max = 4, seed = 0, box = 5, N = 50;
    bool count_only = false, verify = false;

    auto add_margins = [&](CLI::App* cmd, bool with_d) {
        cmd->add_option("--e", e_str, "D5 local charges, comma separated")->required();
        cmd->add_option("--f", f_str, "NS5 local charges, comma separated")->required();
        if (with_d) cmd->add_option("--d", d, "D3 multiplicity between F_m and E_1")->required();
    };

    auto* fp = app.add_subcommand("fixed-points", "enumerate torus fixed points of M(d,e,f)");
    add_margins(fp, true);
    fp->add_flag("--count", count_only, "print only the number of fixed points");
    fp->add_option("--format", format, "text|json");

    auto* tg = app.add_subcommand("tangent", "tangent K-classes at all fixed points");
    add_margins(tg, true);
    tg->add_flag("--verify", verify, "cross-check the two tangent formulas");
    tg->add_option("--format", format, "text|json");

    auto* es = app.add_subcommand("euler-series", "Euler characteristic series Z(q)");
    add_margins(es, false);
    es->add_option("--order", order, "truncation order");
    es->add_option("--format", format, "text|json");

    auto* ps = app.add_subcommand("poincare-series", "cell-count series Z^±(q,t)");
    add_margins(ps, false);
    ps->add_option("--order", order, "truncation order");
    ps->add_option("--sign", sign_str, "minus|plus");
    ps->add_option("--format", format, "text|json");

    auto* pf = app.add_subcommand("partition-function", "parabolic partition function");
    add_margins(pf, false);
    pf->add_option("--eps1", eps1_str, "rational p/q")->required();
    pf->add_option("--eps2", eps2_str, "rational p/q")->required();
    pf->add_option("--a", a_str, "equivariant parameters, comma separated rationals")->required();
    pf->add_option("--order", order, "truncation order");

    auto* cl = app.add_subcommand("classify", "quiver / quiver-like classification");
    cl->add_option("--e", e_str, "D5 local charges")->required();
    cl->add_option("--m", order, "number of NS5 branes")->required();
    cl->add_option("--f", f_str, "NS5 local charges (optional, must match --m)");
    cl->add_option("--d", d, "D3 multiplicity (used with --f for the quiver data)");

    auto* hw = app.add_subcommand("hw", "apply Hanany-Witten moves to a standard triple");
    add_margins(hw, true);
    hw->add_option("--moves", moves,
                   "comma separated: 1, 1i, 2, 2i, or sN for a D5 swap at N")
        ->required();

    auto* cv = app.add_subcommand("covering", "covering / circle-compactness check");
    add_margins(cv, true);

    auto* st = app.add_subcommand("stabilize", "stabilization of P_s(t)");
    add_margins(st, false);
    st->add_option("--smax", s_max, "number of degrees past the base");
    st->add_option("--sign", sign_str, "minus|plus");

    auto* mc = app.add_subcommand("modular-check", "sigma-series and quadratic-form identities");
    mc->add_option("--case", mcase, "321|neg111");
    mc->add_option("--order", N, "check sigma(3n+r) for n = 0..order");
    mc->add_option("--box", box, "lattice box for the F-identity");

    app.add_option("--seed", seed, "seed for randomized subcommands");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*fp) {
            auto e = parse_int_list(e_str), f = parse_int_list(f_str);
            require_margins(e, f);
            if (d < 0) throw CLI::ValidationError("need d >= 0");
            if (count_only) {
                std::cout << bow::count_fixed_points(d, e, f) << "\n";
            } else if (format == "json") {
                bow::Json out = bow::Json::array();
                bow::for_each_fixed_point(d, e, f, [&](const bow::MayaDiagram& M) {
                    out.push_back(bow::to_json(M));
                });
                std::cout << out.dump() << "\n";
            } else {
                i64 idx = 0;
                bow::for_each_fixed_point(d, e, f, [&](const bow::MayaDiagram& M) {
                    std::cout << "# fixed point " << idx++ << "\n"
                              << bow::to_json(M).dump() << "\n";
                });
                std::cout << "total: " << idx << "\n";
            }
        } else if (*tg) {
            auto e = parse_int_list(e_str), f = parse_int_list(f_str);
            require_margins(e, f);
            bow::Json out = bow::Json::array();
            bool ok = true;
            bow::for_each_fixed_point(d, e, f, [&](const bow::MayaDiagram& M) {
                bow::KClass T = bow::tangent_via_pairs(M);
                if (verify && T != bow::tangent_via_eyd(M)) ok = false;
                if (format == "json")
                    out.push_back({{"maya", bow::to_json(M)}, {"tangent", bow::to_json(T)}});
                else
                    std::cout << bow::to_json(T).dump() << "\n";
            });
            if (format == "json") std::cout << out.dump() << "\n";
            if (!ok) {
                std::cerr << "tangent: formula cross-check FAILED\n";
                return 2;
            }
        } else if (*es) {
            auto e = parse_int_list(e_str), f = parse_int_list(f_str);
            require_margins(e, f);
            bow::QSeries Z = bow::euler_series_enum(e, f, order);
            if (Z != bow::euler_series_formula(e, f, order)) {
                std::cerr << "euler-series: enumeration and closed formula disagree\n";
                return 2;
            }
            if (format == "json") std::cout << bow::to_json(Z).dump() << "\n";
            else std::cout << Z.str() << "\n";
        } else if (*ps) {
            auto e = parse_int_list(e_str), f = parse_int_list(f_str);
            require_margins(e, f);
            bow::QTSeries Z = bow::poincare_series(e, f, order, parse_sign(sign_str));
            if (format == "json") std::cout << bow::to_json(Z).dump() << "\n";
            else std::cout << Z.str() << "\n";
        } else if (*pf) {
            auto e = parse_int_list(e_str), f = parse_int_list(f_str);
            require_margins(e, f);
            bow::ParamPoint p;
            p.eps1 = bow::parse_rational(eps1_str);
            p.eps2 = bow::parse_rational(eps2_str);
            std::string cur;
            for (char ch : a_str + ",") {
                if (ch == ',') {
                    p.a.push_back(bow::parse_rational(cur));
                    cur.clear();
                } else cur += ch;
            }
            if (p.a.size() != e.size())
                throw CLI::ValidationError("need one parameter a_i per D5 brane");
            auto Z = bow::partition_series(e, f, p, order);
            for (i64 dd = 0; dd <= order; ++dd)
                std::cout << "Z_" << dd << " = " << bow::rational_str(Z[dd]) << "\n";
        } else if (*cl) {
            auto e = parse_int_list(e_str);
            const int m = static_cast<int>(order);
            const bool q = bow::is_quiver(e, m);
            std::cout << "quiver: " << (q ? "yes" : "no")
                      << "\nquiver-like: " << (bow::is_quiver_like(e, m) ? "yes" : "no") << "\n";
            if (q) {
                bow::BraneTriple t{d, e, std::vector<i64>(m, 0)};
                if (!f_str.empty()) {
                    t.f = parse_int_list(f_str);
                    if (static_cast<int>(t.f.size()) != m)
                        throw CLI::ValidationError("--f length must equal --m");
                    require_margins(e, t.f);
                } else {
                    // any f with matching margin works for the charge normalization
                    i64 se = 0;
                    for (i64 x : e) se += x;
                    t.f.back() = se;
                }
                bow::QuiverData qd = bow::to_quiver(t);
                std::cout << "framing: (" << bow::join_ints(qd.framing) << ")\n";
                if (!f_str.empty())
                    std::cout << "node dims: (" << bow::join_ints(qd.node_dims) << ")\n";
            }
        } else if (*hw) {
            auto e = parse_int_list(e_str), f = parse_int_list(f_str);
            require_margins(e, f);
            bow::BraneTriple t{d, e, f};
            std::string cur;
            for (char ch : moves + ",") {
                if (ch != ',') {
                    cur += ch;
                    continue;
                }
                if (cur == "1") t = bow::move1(t);
                else if (cur == "1i") t = bow::move1_inv(t);
                else if (cur == "2") t = bow::move2(t);
                else if (cur == "2i") t = bow::move2_inv(t);
                else if (!cur.empty() && cur[0] == 's')
                    t = bow::d5_swap_charges(t, std::stoi(cur.substr(1)));
                else throw CLI::ValidationError("unknown move '" + cur + "'");
                cur.clear();
            }
            std::cout << bow::to_json(t).dump() << "\n";
            auto diag = bow::validate_triple(t);
            std::cout << "multiplicities: (" << bow::join_ints(diag.multiplicities) << ")\n";
        } else if (*cv) {
            auto e = parse_int_list(e_str), f = parse_int_list(f_str);
            require_margins(e, f);
            if (d < 0) throw CLI::ValidationError("need d >= 0");
            std::cout << bow::covering_check(d, e, f).str() << "\n";
        } else if (*st) {
            auto e = parse_int_list(e_str), f = parse_int_list(f_str);
            require_margins(e, f);
            std::cout << bow::stabilization_report(e, f, s_max, parse_sign(sign_str)).str();
        } else if (*mc) {
            bow::SigmaSeriesReport rep;
            if (mcase == "321")
                rep = bow::check_sigma_series({3, 2, 1}, {3, 2, 1}, 1, 0, N);
            else if (mcase == "neg111")
                rep = bow::check_sigma_series({-1, -1, -1}, {-2, -1, 0}, 2, 3, N);
            else throw CLI::ValidationError("case must be 321 or neg111");
            std::cout << rep.str() << "\n";
            auto app_rep = bow::quadratic_form_check(box);
            std::cout << app_rep.str() << "\n";
            if (!rep.holds || !app_rep.holds) return 2;
        }
    } catch (const CLI::ValidationError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const bow::NonGenericParameter& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const std::out_of_range& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const std::logic_error& err) {
        std::cerr << "internal consistency failure: " << err.what() << "\n";
        return 2;
    }
    return 0;
}
