// ordsel: decide maximal selectivity of full-rank orders in prime-degree
// subfields of rational central simple algebras, plus the supporting local
// computations (Hilbert symbols, ramification sets, splitting types,
// Galois automorphisms).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordsel/field.hpp"
#include "ordsel/hilbert.hpp"
#include "ordsel/order.hpp"
#include "ordsel/selectivity.hpp"

using nlohmann::json;
using namespace ordsel;

namespace {

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw validation_error("not an integer: '" + s + "'");
    }
}

Rat parse_rat(const std::string& s) {
    try {
        Rat r(s);
        if (r.get_den() == 0) throw validation_error("zero denominator: '" + s + "'");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw validation_error("not a rational: '" + s + "'");
    }
}

// comma-separated integer coefficients, constant term first
ZPoly parse_poly(const std::string& s) {
    ZPoly f;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) f.push_back(parse_int(tok));
    while (f.size() > 1 && f.back() == 0) f.pop_back();
    if (f.empty()) throw validation_error("empty polynomial");
    return f;
}

std::set<Int> parse_primes(const std::string& s) {
    std::set<Int> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.insert(parse_int(tok));
    return out;
}

// Row-major rational matrix: inline "1,0;0,1/2" or @file holding a JSON
// array of arrays (entries numbers or "num/den" strings). Each row is one
// basis vector in power-basis coordinates; callers transpose to columns.
QMat parse_matrix_rows(const std::string& input) {
    QMat rows;
    if (!input.empty() && input[0] == '@') {
        std::ifstream in(input.substr(1));
        if (!in) throw validation_error("cannot open matrix file: " + input.substr(1));
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw validation_error(std::string("bad matrix JSON: ") + e.what());
        }
        if (!j.is_array()) throw validation_error("matrix JSON must be an array of arrays");
        for (const auto& jrow : j) {
            std::vector<Rat> row;
            for (const auto& e : jrow) {
                if (e.is_string()) row.push_back(parse_rat(e.get<std::string>()));
                else if (e.is_number_integer()) row.push_back(Rat(static_cast<long>(e.get<long long>())));
                else throw validation_error("matrix entries must be integers or 'num/den' strings");
            }
            rows.push_back(std::move(row));
        }
    } else {
        std::stringstream ss(input);
        std::string rowtok;
        while (std::getline(ss, rowtok, ';')) {
            std::vector<Rat> row;
            std::stringstream rs(rowtok);
            std::string tok;
            while (std::getline(rs, tok, ',')) row.push_back(parse_rat(tok));
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) throw validation_error("empty matrix");
    for (const auto& r : rows)
        if (r.size() != rows.size()) throw validation_error("matrix must be square");
    return rows;
}

QMat transpose(const QMat& m) {
    QMat t(m[0].size(), std::vector<Rat>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

Place parse_place(const std::string& s) {
    if (s == "inf" || s == "infinity" || s == "oo") return Place::infinite();
    return Place::finite(parse_int(s));
}

json matrix_to_json(const QMat& rows) {
    json out = json::array();
    for (const auto& r : rows) {
        json jr = json::array();
        for (const auto& e : r) jr.push_back(e.get_str());
        out.push_back(jr);
    }
    return out;
}

json primes_to_json(const std::set<Int>& s) {
    json out = json::array();
    for (const auto& p : s) out.push_back(p.get_str());
    return out;
}

json poly_to_json(const ZPoly& f) {
    json out = json::array();
    for (const auto& c : f) out.push_back(c.get_str());
    return out;
}

json trace_to_json(const std::vector<TraceEntry>& trace) {
    json out = json::array();
    for (const auto& t : trace)
        out.push_back(json{{"place", t.place ? t.place->str() : "global"}, {"finding", t.finding}});
    return out;
}

struct Output {
    std::string command;
    json inputs = json::object();
    json result;
    json extras = json::object(); // selective / proportion / ...
    json trace = json::array();
    std::vector<std::string> text;
};

bool g_json = false;

void emit_output(const Output& out) {
    if (g_json) {
        json j{{"command", out.command},
               {"inputs", out.inputs},
               {"result", out.result},
               {"trace", out.trace},
               {"errors", json::array()}};
        for (auto it = out.extras.begin(); it != out.extras.end(); ++it) j[it.key()] = it.value();
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& line : out.text) std::cout << line << "\n";
    }
}

void emit_error(const std::string& command, const json& inputs, const std::string& msg) {
    if (g_json) {
        json j{{"command", command},
               {"inputs", inputs},
               {"result", nullptr},
               {"trace", json::array()},
               {"errors", json::array({msg})}};
        std::cout << j.dump(2) << "\n";
    }
    std::cerr << "error: " << msg << "\n";
}

std::vector<std::string> verdict_text(const Verdict& v) {
    std::vector<std::string> lines;
    lines.push_back("f_m:        " + v.f_m());
    lines.push_back(std::string("selective:  ") + (v.selective ? "true" : "false"));
    lines.push_back("proportion: " + v.proportion.get_str());
    for (const auto& t : v.trace)
        lines.push_back("place " + (t.place ? t.place->str() : "global") + ": " + t.finding);
    return lines;
}

void fill_verdict(Output& out, const Verdict& v) {
    out.result = v.f_m();
    out.extras["selective"] = v.selective;
    out.extras["proportion"] = v.proportion.get_str();
    out.trace = trace_to_json(v.trace);
    out.text = verdict_text(v);
}

// algebra input shared by embeds / selective-quadratic
struct AlgebraArgs {
    std::string a, b;
    std::string ramified;
    bool ramified_infinite = false;
    bool ramified_set = false; // whether --ramified was given

    QuatAlg build(json& inputs) const {
        const bool have_symbol = !a.empty() || !b.empty();
        if (have_symbol && (ramified_set || ramified_infinite))
            throw validation_error("give the algebra either by --a/--b or by --ramified flags, not both");
        if (have_symbol) {
            if (a.empty() || b.empty()) throw validation_error("both --a and --b are required");
            Int ia = parse_int(a), ib = parse_int(b);
            inputs["a"] = ia.get_str();
            inputs["b"] = ib.get_str();
            return QuatAlg::symbol(ia, ib);
        }
        std::set<Int> primes = parse_primes(ramified);
        inputs["ramified"] = primes_to_json(primes);
        inputs["ramified_infinite"] = ramified_infinite;
        return QuatAlg::ramset(primes, ramified_infinite);
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"selectivity of orders in prime-degree subfields of rational CSAs"};
    app.require_subcommand(1);
    app.add_flag("--json", g_json, "emit one JSON object instead of text");

    // hilbert
    auto* c_hilbert = app.add_subcommand("hilbert", "local Hilbert symbol (a,b)_v");
    c_hilbert->fallthrough();
    std::string h_a, h_b, h_place;
    c_hilbert->add_option("--a", h_a, "first entry")->required();
    c_hilbert->add_option("--b", h_b, "second entry")->required();
    c_hilbert->add_option("--place", h_place, "prime or 'inf'")->required();

    // ramset
    auto* c_ramset = app.add_subcommand("ramset", "ramified places of the symbol algebra (a,b)");
    c_ramset->fallthrough();
    std::string r_a, r_b;
    c_ramset->add_option("--a", r_a)->required();
    c_ramset->add_option("--b", r_b)->required();

    // embeds
    auto* c_embeds = app.add_subcommand("embeds", "does Q(sqrt(d)) embed in the quaternion algebra?");
    c_embeds->fallthrough();
    std::string e_d;
    AlgebraArgs e_alg;
    c_embeds->add_option("--d", e_d)->required();
    c_embeds->add_option("--a", e_alg.a);
    c_embeds->add_option("--b", e_alg.b);
    c_embeds->add_option("--ramified", e_alg.ramified);
    c_embeds->add_flag("--ramified-infinite", e_alg.ramified_infinite);

    // selective-quadratic
    auto* c_sq = app.add_subcommand("selective-quadratic", "decide F_M for Q(sqrt(d)) inside a quaternion algebra");
    c_sq->fallthrough();
    std::string sq_d;
    AlgebraArgs sq_alg;
    c_sq->add_option("--d", sq_d)->required();
    c_sq->add_option("--a", sq_alg.a);
    c_sq->add_option("--b", sq_alg.b);
    c_sq->add_option("--ramified", sq_alg.ramified);
    c_sq->add_flag("--ramified-infinite", sq_alg.ramified_infinite);

    // selective-odd
    auto* c_so = app.add_subcommand("selective-odd", "decide F_M for an odd-prime-degree field and order");
    c_so->fallthrough();
    std::string so_poly, so_basis, so_ram, so_intbasis;
    unsigned so_degree = 0;
    c_so->add_option("--poly", so_poly, "monic integer polynomial, constant term first")->required();
    c_so->add_option("--degree", so_degree, "optional; must match the polynomial degree");
    c_so->add_option("--order-basis", so_basis, "row-major basis of the order, or @file.json")->required();
    c_so->add_option("--ramified", so_ram, "finite ramified primes of the algebra");
    c_so->add_option("--integral-basis", so_intbasis, "row-major basis of the maximal order, or @file.json");

    // splitting
    auto* c_split = app.add_subcommand("splitting", "decomposition shape of a prime in the field");
    c_split->fallthrough();
    std::string sp_poly, sp_prime, sp_intbasis;
    unsigned sp_degree = 0;
    c_split->add_option("--poly", sp_poly)->required();
    c_split->add_option("--degree", sp_degree, "optional; must match the polynomial degree");
    c_split->add_option("--prime", sp_prime)->required();
    c_split->add_option("--integral-basis", sp_intbasis);

    // automorphism
    auto* c_aut = app.add_subcommand("automorphism", "a generator of Gal(L/Q), if L/Q is Galois");
    c_aut->fallthrough();
    std::string au_poly;
    unsigned au_degree = 0;
    c_aut->add_option("--poly", au_poly)->required();
    c_aut->add_option("--degree", au_degree, "optional; must match the polynomial degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << e.what() << "\n" << app.help() << "\n";
        return 2;
    }

    std::string cmd = app.get_subcommands().front()->get_name();
    json inputs = json::object();
    try {
        Output out;
        out.command = cmd;

        if (cmd == "hilbert") {
            Int a = parse_int(h_a), b = parse_int(h_b);
            Place v = parse_place(h_place);
            inputs = {{"a", a.get_str()}, {"b", b.get_str()}, {"place", v.str()}};
            int s = hilbert_symbol(a, b, v);
            out.inputs = inputs;
            out.result = s;
            out.text = {std::to_string(s)};
        } else if (cmd == "ramset") {
            Int a = parse_int(r_a), b = parse_int(r_b);
            inputs = {{"a", a.get_str()}, {"b", b.get_str()}};
            out.inputs = inputs;
            json places = json::array();
            std::string line;
            for (const Place& v : ramified_set(QuatAlg::symbol(a, b))) {
                places.push_back(v.str());
                if (!line.empty()) line += " ";
                line += v.str();
            }
            out.result = places;
            out.text = {line.empty() ? "(unramified everywhere)" : line};
        } else if (cmd == "embeds") {
            Int d = squarefree_part(parse_int(e_d));
            inputs["d"] = d.get_str();
            QuatAlg A = e_alg.build(inputs);
            out.inputs = inputs;
            bool yes = embeds_quadratic(d, A);
            out.result = yes;
            out.text = {yes ? "true" : "false"};
        } else if (cmd == "selective-quadratic") {
            Int d = parse_int(sq_d);
            inputs["d"] = d.get_str();
            QuatAlg A = sq_alg.build(inputs);
            out.inputs = inputs;
            fill_verdict(out, decide_quadratic(d, A));
        } else if (cmd == "selective-odd") {
            ZPoly f = parse_poly(so_poly);
            if (so_degree != 0 && so_degree != f.size() - 1)
                throw validation_error("--degree does not match the polynomial");
            QMat basis_rows = parse_matrix_rows(so_basis);
            std::set<Int> S = parse_primes(so_ram);
            inputs["poly"] = poly_to_json(f);
            inputs["order_basis"] = matrix_to_json(basis_rows);
            inputs["ramified"] = primes_to_json(S);
            NumField L;
            if (!so_intbasis.empty()) {
                QMat ib = parse_matrix_rows(so_intbasis);
                inputs["integral_basis"] = matrix_to_json(ib);
                L = make_field(f, transpose(ib));
            } else {
                L = make_field(f);
            }
            out.inputs = inputs;
            OrderLat H = make_order(L, transpose(basis_rows));
            fill_verdict(out, decide_odd(L, H, S));
        } else if (cmd == "splitting") {
            ZPoly f = parse_poly(sp_poly);
            if (sp_degree != 0 && sp_degree != f.size() - 1)
                throw validation_error("--degree does not match the polynomial");
            Int p = parse_int(sp_prime);
            inputs["poly"] = poly_to_json(f);
            inputs["prime"] = p.get_str();
            NumField L;
            if (!sp_intbasis.empty()) {
                QMat ib = parse_matrix_rows(sp_intbasis);
                inputs["integral_basis"] = matrix_to_json(ib);
                L = make_field(f, transpose(ib));
            } else {
                L = make_field(f);
            }
            out.inputs = inputs;
            SplitShape shape = splitting_type(L, p);
            json fs = json::array();
            std::string line = "shape:";
            for (const auto& fac : shape.factors) {
                fs.push_back(json{{"residue_degree", fac.residue_degree}, {"ram_index", fac.ram_index}});
                line += " (f=" + std::to_string(fac.residue_degree) +
                        ",e=" + std::to_string(fac.ram_index) + ")";
            }
            out.result = fs;
            out.extras["nonsplit"] = shape.nonsplit();
            out.text = {line, std::string("nonsplit: ") + (shape.nonsplit() ? "true" : "false")};
        } else if (cmd == "automorphism") {
            ZPoly f = parse_poly(au_poly);
            if (au_degree != 0 && au_degree != f.size() - 1)
                throw validation_error("--degree does not match the polynomial");
            inputs["poly"] = poly_to_json(f);
            NumField L = make_field(f);
            out.inputs = inputs;
            auto sigma = find_automorphism(L);
            if (sigma) {
                json coeffs = json::array();
                std::string line = "image_poly: ";
                QPoly g = sigma->image_poly;
                g.resize(L.degree, Rat(0));
                for (std::size_t i = 0; i < g.size(); ++i) {
                    coeffs.push_back(g[i].get_str());
                    if (i) line += ",";
                    line += g[i].get_str();
                }
                out.result = coeffs;
                out.text = {line};
            } else {
                out.result = nullptr;
                out.trace = trace_to_json({TraceEntry{std::nullopt, "not Galois"}});
                out.text = {"image_poly: none (not Galois)"};
            }
        }

        emit_output(out);
        return 0;
    } catch (const validation_error& e) {
        emit_error(cmd, inputs, e.what());
        return 2;
    } catch (const internal_error& e) {
        emit_error(cmd, inputs, e.what());
        return 1;
    } catch (const std::exception& e) {
        emit_error(cmd, inputs, std::string("internal: ") + e.what());
        return 1;
    }
}
