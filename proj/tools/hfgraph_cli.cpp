// Command-line front end. Deliberately thin: every computation goes
// through the C API in hfgraph.h, so the CLI doubles as a smoke test of
// the shared-library surface.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "hfgraph.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFail = 1;
constexpr int kExitInvalid = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open file: " << path << "\n";
        std::exit(kExitInvalid);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct GroupHandle {
    hfg_group* g = nullptr;
    ~GroupHandle() { hfg_group_free(g); }
};

struct DigraphHandle {
    hfg_digraph* d = nullptr;
    ~DigraphHandle() { hfg_digraph_free(d); }
};

int finish(hfg_status st, char* report) {
    if (report) {
        std::cout << report;
        hfg_free_string(report);
    }
    switch (st) {
        case HFG_OK:
            return kExitOk;
        case HFG_FAIL:
            return kExitPropertyFail;
        default:
            std::cerr << "error: " << hfg_last_error() << "\n";
            return kExitInvalid;
    }
}

hfg_status make_group(const std::string& spec, const std::string& table_file, hfg_group** out) {
    if (!table_file.empty()) return hfg_group_new_table(slurp(table_file).c_str(), out);
    return hfg_group_new(spec.c_str(), out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"half-factorial sets, Cayley digraphs, geodeticality and KVL"};
    app.require_subcommand(1);
    app.fallthrough();  // allow --format after the subcommand name

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    std::string group_spec, table_file, subset_spec, input_file, voltage_file;
    int max_len = 0, max_vertices = 0, max_edges = 0, max_order = 8, order_cap = 12;
    unsigned seed = 1;
    bool naive = false;

    auto add_group_opts = [&](CLI::App* cmd, bool need_subset) {
        cmd->add_option("--group", group_spec, "abelian group spec, e.g. 2,2,3");
        cmd->add_option("--table", table_file, "Cayley multiplication table file");
        if (need_subset)
            cmd->add_option("--subset", subset_spec, "subset spec, e.g. 1,0;0,1")->required();
    };

    auto* atoms = app.add_subcommand("atoms", "enumerate atoms over (G, S)");
    add_group_opts(atoms, true);
    atoms->add_option("--max-len", max_len, "atom length cap (default |G|)");

    auto* hf = app.add_subcommand("hf", "half-factoriality of S in G");
    add_group_opts(hf, true);
    auto* whf = app.add_subcommand("whf", "weak half-factoriality of S in G");
    add_group_opts(whf, true);

    auto* cayley = app.add_subcommand("cayley", "emit Cay(G;S) as a digraph file");
    add_group_opts(cayley, true);

    auto* geodetic = app.add_subcommand("geodetic", "geodeticality of a digraph or of Cay(G;S)");
    add_group_opts(geodetic, false);
    geodetic->add_option("--subset", subset_spec, "subset spec (with --group/--table)");
    geodetic->add_option("--input", input_file, "digraph file");
    geodetic->add_flag("--naive", naive, "force the all-pairs oracle check");
    geodetic->add_option("--max-vertices", max_vertices, "path enumeration cap (default 14)");

    auto* kvl = app.add_subcommand("kvl", "Kirchhoff's Voltage Law check");
    add_group_opts(kvl, false);
    kvl->add_option("--subset", subset_spec, "subset spec (with --group/--table)");
    kvl->add_option("--input", input_file, "voltage digraph file");

    auto* spectrum = app.add_subcommand("spectrum", "m-geodetical path spectrum");
    spectrum->add_option("--input", input_file, "digraph file")->required();
    spectrum->add_option("--max-vertices", max_vertices, "path enumeration cap (default 14)");

    auto* constants = app.add_subcommand("constants", "mu, t, mu0, t0 of a group, "
                                                      "or mu*/t* of a colored digraph");
    add_group_opts(constants, false);
    constants->add_option("--input", input_file, "colored digraph file (star constants)");
    constants->add_option("--voltage", voltage_file, "voltage digraph file (adds mu0*/t0*)");
    constants->add_option("--max-order", order_cap, "group order cap (default 12)");

    auto* bounds = app.add_subcommand("bounds", "edge-coloring bound report for a graph");
    bounds->add_option("--input", input_file, "symmetric digraph file")->required();
    bounds->add_option("--max-edges", max_edges, "edge subset search cap (default 12)");

    auto* bond = app.add_subcommand("bond", "potential-induced geodetical digraph demo");
    bond->add_option("--input", input_file, "digraph file")->required();
    bond->add_option("--seed", seed, "potential seed");
    bond->add_option("--max-vertices", max_vertices, "path enumeration cap (default 14)");

    auto* verify = app.add_subcommand("verify-theorems", "HF==geodetical and WHF==KVL sweep");
    verify->add_option("--max-order", max_order, "largest group order to sweep (default 8)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    const int json = format == "json" ? 1 : 0;
    char* report = nullptr;

    if (*atoms || *hf || *whf || *cayley) {
        GroupHandle g;
        hfg_status st = make_group(group_spec, table_file, &g.g);
        if (st != HFG_OK) return finish(st, nullptr);
        if (*atoms) st = hfg_atoms(g.g, subset_spec.c_str(), max_len, json, &report);
        if (*hf) st = hfg_half_factorial(g.g, subset_spec.c_str(), 0, json, &report);
        if (*whf) st = hfg_half_factorial(g.g, subset_spec.c_str(), 1, json, &report);
        if (*cayley) st = hfg_cayley_export(g.g, subset_spec.c_str(), json, &report);
        return finish(st, report);
    }

    if (*geodetic) {
        if (!input_file.empty()) {
            DigraphHandle d;
            hfg_status st = hfg_digraph_new(slurp(input_file).c_str(), &d.d);
            if (st == HFG_OK && max_vertices > 0) st = hfg_digraph_set_guard(d.d, max_vertices);
            if (st == HFG_OK) st = hfg_digraph_geodetic(d.d, json, &report);
            return finish(st, report);
        }
        GroupHandle g;
        hfg_status st = make_group(group_spec, table_file, &g.g);
        if (st == HFG_OK)
            st = hfg_cayley_geodetic(g.g, subset_spec.c_str(), naive ? 1 : 0, json, &report);
        return finish(st, report);
    }

    if (*kvl) {
        if (!input_file.empty()) {
            hfg_status st = hfg_kvl_file(slurp(input_file).c_str(), json, &report);
            return finish(st, report);
        }
        GroupHandle g;
        hfg_status st = make_group(group_spec, table_file, &g.g);
        if (st == HFG_OK) st = hfg_cayley_kvl(g.g, subset_spec.c_str(), json, &report);
        return finish(st, report);
    }

    if (*spectrum) {
        DigraphHandle d;
        hfg_status st = hfg_digraph_new(slurp(input_file).c_str(), &d.d);
        if (st == HFG_OK && max_vertices > 0) st = hfg_digraph_set_guard(d.d, max_vertices);
        if (st == HFG_OK) st = hfg_digraph_spectrum(d.d, json, &report);
        return finish(st, report);
    }

    if (*constants) {
        if (!input_file.empty()) {
            std::string text = slurp(input_file);
            std::string voltage_text;
            bool has_voltage = !voltage_file.empty();
            if (has_voltage) voltage_text = slurp(voltage_file);
            hfg_status st = hfg_star_constants(text.c_str(),
                                               has_voltage ? voltage_text.c_str() : nullptr,
                                               json, &report);
            return finish(st, report);
        }
        GroupHandle g;
        hfg_status st = make_group(group_spec, table_file, &g.g);
        if (st == HFG_OK) st = hfg_constants(g.g, order_cap, json, &report);
        return finish(st, report);
    }

    if (*bounds) {
        hfg_status st = hfg_bounds(slurp(input_file).c_str(), max_edges, json, &report);
        return finish(st, report);
    }

    if (*bond) {
        DigraphHandle d;
        hfg_status st = hfg_digraph_new(slurp(input_file).c_str(), &d.d);
        if (st == HFG_OK && max_vertices > 0) st = hfg_digraph_set_guard(d.d, max_vertices);
        if (st == HFG_OK) st = hfg_digraph_bond(d.d, seed, json, &report);
        return finish(st, report);
    }

    if (*verify) {
        hfg_status st = hfg_verify_theorems(max_order, json, &report);
        return finish(st, report);
    }

    return kExitInvalid;
}
