#include "hfgraph.h"

#include <cstring>
#include <memory>
#include <sstream>

#include "cayley.hpp"
#include "constants.hpp"
#include "io.hpp"
#include "verify.hpp"
#include "voltage.hpp"

using nlohmann::json;

struct hfg_group {
    std::unique_ptr<hfg::Group> impl;
};

struct hfg_digraph {
    std::unique_ptr<hfg::WeightedDigraph> impl;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_report(char** report, const std::string& s) {
    if (report) *report = dup_string(s);
}

// Runs fn, translating exceptions into status codes. fn returns the
// status for the successful-computation case (HFG_OK or HFG_FAIL).
template <typename Fn>
hfg_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const hfg::InputError& e) {
        g_last_error = e.what();
        return HFG_EINVAL;
    } catch (const hfg::LimitError& e) {
        g_last_error = e.what();
        return HFG_ELIMIT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return HFG_EINTERNAL;
    }
}

std::string path_text(const hfg::Group* g, const hfg::Path& p) {
    std::string out;
    for (size_t i = 0; i < p.vertices.size(); ++i) {
        if (i) out += "->";
        out += g ? g->element_name(p.vertices[i]) : std::to_string(p.vertices[i]);
    }
    out += " (length " + hfg::rational_pretty(p.length) + ")";
    return out;
}

std::string geodetic_report_text(const hfg::Group* g, const hfg::GeodeticResult& r) {
    if (r.holds) return "geodetical\n";
    std::string out = "not geodetical\n";
    out += "  path 1: " + path_text(g, r.certificate->first) + "\n";
    out += "  path 2: " + path_text(g, r.certificate->second) + "\n";
    return out;
}

json geodetic_report_json(const hfg::Group* g, const hfg::WeightedDigraph& d,
                          const hfg::GeodeticResult& r) {
    json j = {{"geodetical", r.holds}};
    if (!r.holds) {
        j["certificate"] = {hfg::path_to_json(g, d, r.certificate->first),
                            hfg::path_to_json(g, d, r.certificate->second)};
    }
    return j;
}

json subset_json(const hfg::Group& g, const std::vector<int>& elems) {
    json out = json::array();
    for (int x : elems) out.push_back(g.element_name(x));
    return out;
}

}  // namespace

namespace {

hfg_status kvl_report(const hfg::Group* g, const hfg::WeightedDigraph& d,
                      const hfg::VoltageAssignment& v, int json_out, char** report) {
    hfg::KvlReport r = hfg::kvl_check(d, v);
    if (json_out) {
        json j = {{"kvl", r.holds}, {"modulus", v.modulus}};
        if (!r.holds) {
            json residues = json::array();
            for (int ai : r.violating_cycle->arc_indices) residues.push_back(v.residues[ai]);
            j["violating_cycle"] = hfg::path_to_json(g, d, *r.violating_cycle);
            j["residues"] = std::move(residues);
            j["residue_sum"] = r.residue_sum;
        }
        set_report(report, j.dump(2) + "\n");
    } else if (r.holds) {
        set_report(report, "KVL holds\n");
    } else {
        std::ostringstream out;
        out << "KVL violated\ncycle: " << path_text(g, *r.violating_cycle) << "\nresidues mod "
            << v.modulus << ":";
        for (int ai : r.violating_cycle->arc_indices) out << " " << v.residues[ai];
        out << " (sum = " << r.residue_sum << ")\n";
        set_report(report, out.str());
    }
    return r.holds ? HFG_OK : HFG_FAIL;
}

}  // namespace

extern "C" {

hfg_status hfg_group_new(const char* spec, hfg_group** out) {
    return guarded([&]() -> hfg_status {
        if (!spec || !out) throw hfg::InputError("null argument");
        auto g = std::make_unique<hfg::AbelianGroup>(hfg::AbelianGroup::parse(spec));
        *out = new hfg_group{std::move(g)};
        return HFG_OK;
    });
}

hfg_status hfg_group_new_table(const char* text, hfg_group** out) {
    return guarded([&]() -> hfg_status {
        if (!text || !out) throw hfg::InputError("null argument");
        auto g = std::make_unique<hfg::TableGroup>(hfg::TableGroup::parse(text));
        *out = new hfg_group{std::move(g)};
        return HFG_OK;
    });
}

void hfg_group_free(hfg_group* g) { delete g; }

int hfg_group_order(const hfg_group* g) { return g ? g->impl->order() : -1; }

long long hfg_group_exponent(const hfg_group* g) { return g ? g->impl->exponent() : -1; }

hfg_status hfg_digraph_new(const char* text, hfg_digraph** out) {
    return guarded([&]() -> hfg_status {
        if (!text || !out) throw hfg::InputError("null argument");
        auto d = std::make_unique<hfg::WeightedDigraph>(hfg::parse_digraph(text));
        *out = new hfg_digraph{std::move(d)};
        return HFG_OK;
    });
}

void hfg_digraph_free(hfg_digraph* d) { delete d; }

hfg_status hfg_digraph_set_guard(hfg_digraph* d, int max_vertices) {
    return guarded([&]() -> hfg_status {
        if (!d || max_vertices < 1) throw hfg::InputError("guard must be >= 1");
        d->impl->set_enumeration_guard(max_vertices);
        return HFG_OK;
    });
}

hfg_status hfg_digraph_geodetic(const hfg_digraph* d, int json_out, char** report) {
    return guarded([&]() -> hfg_status {
        if (!d) throw hfg::InputError("null digraph");
        auto r = d->impl->is_geodetical();
        set_report(report, json_out ? geodetic_report_json(nullptr, *d->impl, r).dump(2) + "\n"
                                    : geodetic_report_text(nullptr, r));
        return r.holds ? HFG_OK : HFG_FAIL;
    });
}

hfg_status hfg_digraph_spectrum(const hfg_digraph* d, int json_out, char** report) {
    return guarded([&]() -> hfg_status {
        if (!d) throw hfg::InputError("null digraph");
        auto spec = d->impl->path_spectrum();
        if (json_out) {
            json pairs = json::array();
            for (const auto& ps : spec.pairs) {
                json lens = json::array();
                for (const auto& l : ps.lengths) lens.push_back(hfg::rational_to_string(l));
                pairs.push_back({{"from", ps.from},
                                 {"to", ps.to},
                                 {"m", ps.lengths.size()},
                                 {"lengths", std::move(lens)},
                                 {"paths", ps.path_count}});
            }
            json per_m = json::object();
            for (auto [m, c] : spec.paths_per_m) per_m[std::to_string(m)] = c;
            set_report(report, json({{"pairs", std::move(pairs)},
                                     {"paths_per_m", std::move(per_m)},
                                     {"max_m", spec.max_m}})
                                   .dump(2) +
                                   "\n");
        } else {
            std::ostringstream out;
            for (const auto& ps : spec.pairs) {
                out << ps.from << " -> " << ps.to << ": m=" << ps.lengths.size() << " lengths={";
                for (size_t i = 0; i < ps.lengths.size(); ++i)
                    out << (i ? "," : "") << hfg::rational_pretty(ps.lengths[i]);
                out << "} paths=" << ps.path_count << "\n";
            }
            out << "max m: " << spec.max_m << "\n";
            for (auto [m, c] : spec.paths_per_m) out << "|G_" << m << "| = " << c << " paths\n";
            set_report(report, out.str());
        }
        return HFG_OK;
    });
}

hfg_status hfg_digraph_unique_path(const hfg_digraph* d, int* up) {
    return guarded([&]() -> hfg_status {
        if (!d || !up) throw hfg::InputError("null argument");
        *up = d->impl->is_unique_path() ? 1 : 0;
        return HFG_OK;
    });
}

hfg_status hfg_digraph_bond(const hfg_digraph* d, unsigned seed, int json_out, char** report) {
    return guarded([&]() -> hfg_status {
        if (!d) throw hfg::InputError("null digraph");
        hfg::Potential p = hfg::random_potential(d->impl->vertex_count(), seed);
        hfg::WeightedDigraph induced = hfg::bond_induced_digraph(*d->impl, p);
        auto geo = induced.is_geodetical();
        if (json_out) {
            json jp = json::array();
            for (const auto& r : p.p) jp.push_back(hfg::rational_to_string(r));
            set_report(report, json({{"potential", std::move(jp)},
                                     {"induced", hfg::digraph_to_json(induced)},
                                     {"geodetical", geo.holds}})
                                   .dump(2) +
                                   "\n");
        } else {
            std::ostringstream out;
            out << "potential:";
            for (size_t i = 0; i < p.p.size(); ++i)
                out << " p(" << i << ")=" << hfg::rational_pretty(p.p[i]);
            out << "\ninduced digraph:\n" << hfg::digraph_to_string(induced);
            out << (geo.holds ? "geodetical\n" : "not geodetical\n");
            set_report(report, out.str());
        }
        return geo.holds ? HFG_OK : HFG_FAIL;
    });
}

hfg_status hfg_star_constants(const char* digraph_text, const char* voltage_text,
                              int json_out, char** report) {
    return guarded([&]() -> hfg_status {
        if (!digraph_text) throw hfg::InputError("null digraph text");
        std::optional<hfg::VoltageAssignment> volt;
        std::optional<hfg::WeightedDigraph> d;
        if (voltage_text) {
            auto [vd, va] = hfg::parse_voltage_digraph(voltage_text);
            d.emplace(std::move(vd));
            volt = std::move(va);
        } else {
            d.emplace(hfg::parse_digraph(digraph_text));
        }
        auto r = hfg::compute_mu_star_t_star(*d, volt);
        if (json_out) {
            json j = {{"mu_star", r.mu_star},
                      {"t_star", r.t_star},
                      {"mu_star_witness", r.mu_star_witness},
                      {"t_star_cover", r.t_star_cover}};
            if (r.mu0_star) {
                j["mu0_star"] = *r.mu0_star;
                j["t0_star"] = *r.t0_star;
                j["mu0_star_witness"] = r.mu0_star_witness;
                j["t0_star_cover"] = r.t0_star_cover;
            }
            set_report(report, j.dump(2) + "\n");
        } else {
            std::ostringstream out;
            out << "mu* = " << r.mu_star << "\nt* = " << r.t_star << "\n";
            if (r.mu0_star) out << "mu0* = " << *r.mu0_star << "\nt0* = " << *r.t0_star << "\n";
            set_report(report, out.str());
        }
        return HFG_OK;
    });
}

hfg_status hfg_atoms(const hfg_group* g, const char* subset, int max_len,
                     int json_out, char** report) {
    return guarded([&]() -> hfg_status {
        if (!g || !subset) throw hfg::InputError("null argument");
        hfg::SubsetS s = hfg::parse_subset(*g->impl, subset);
        std::optional<int> cap;
        if (max_len > 0) cap = max_len;
        auto atoms = hfg::enumerate_atoms(*g->impl, s, cap);
        if (json_out) {
            json ja = json::array();
            for (const auto& a : atoms) ja.push_back(hfg::atom_to_json(*g->impl, a));
            set_report(report, json({{"atoms", std::move(ja)}}).dump(2) + "\n");
        } else {
            std::string out;
            for (const auto& a : atoms) out += hfg::atom_to_line(*g->impl, a) + "\n";
            set_report(report, out);
        }
        return HFG_OK;
    });
}

hfg_status hfg_half_factorial(const hfg_group* g, const char* subset, int weak,
                              int json_out, char** report) {
    return guarded([&]() -> hfg_status {
        if (!g || !subset) throw hfg::InputError("null argument");
        hfg::SubsetS s = hfg::parse_subset(*g->impl, subset);
        hfg::HfResult r = weak ? hfg::is_weakly_half_factorial(*g->impl, s)
                               : hfg::is_half_factorial(*g->impl, s);
        const char* name = weak ? "weakly half factorial" : "half factorial";
        if (json_out) {
            json j = {{"property", weak ? "whf" : "hf"}, {"holds", r.holds}};
            if (r.certificate) j["certificate"] = hfg::atom_to_json(*g->impl, *r.certificate);
            set_report(report, j.dump(2) + "\n");
        } else if (r.holds) {
            set_report(report, std::string(name) + "\n");
        } else {
            set_report(report, std::string("not ") + name + "\ncertificate atom: " +
                                   hfg::atom_to_line(*g->impl, *r.certificate) + "\n");
        }
        return r.holds ? HFG_OK : HFG_FAIL;
    });
}

hfg_status hfg_cayley_export(const hfg_group* g, const char* subset, int json_out, char** report) {
    return guarded([&]() -> hfg_status {
        if (!g || !subset) throw hfg::InputError("null argument");
        hfg::SubsetS s = hfg::parse_subset(*g->impl, subset);
        hfg::CayleyDigraph cay = hfg::build_cayley(*g->impl, s);
        set_report(report, json_out ? hfg::digraph_to_json(cay.base).dump(2) + "\n"
                                    : hfg::digraph_to_string(cay.base));
        return HFG_OK;
    });
}

hfg_status hfg_cayley_geodetic(const hfg_group* g, const char* subset, int naive,
                               int json_out, char** report) {
    return guarded([&]() -> hfg_status {
        if (!g || !subset) throw hfg::InputError("null argument");
        hfg::SubsetS s = hfg::parse_subset(*g->impl, subset);
        hfg::CayleyDigraph cay = hfg::build_cayley(*g->impl, s);
        auto r = hfg::is_geodetical_cayley(*g->impl, cay, naive != 0);
        set_report(report, json_out
                               ? geodetic_report_json(g->impl.get(), cay.base, r).dump(2) + "\n"
                               : geodetic_report_text(g->impl.get(), r));
        return r.holds ? HFG_OK : HFG_FAIL;
    });
}

hfg_status hfg_cayley_kvl(const hfg_group* g, const char* subset, int json_out, char** report) {
    return guarded([&]() -> hfg_status {
        if (!g || !subset) throw hfg::InputError("null argument");
        hfg::SubsetS s = hfg::parse_subset(*g->impl, subset);
        hfg::CayleyDigraph cay = hfg::build_cayley(*g->impl, s);
        hfg::VoltageAssignment v = hfg::cayley_voltage(*g->impl, cay);
        return kvl_report(g->impl.get(), cay.base, v, json_out, report);
    });
}

hfg_status hfg_kvl_file(const char* voltage_text, int json_out, char** report) {
    return guarded([&]() -> hfg_status {
        if (!voltage_text) throw hfg::InputError("null voltage text");
        auto [d, v] = hfg::parse_voltage_digraph(voltage_text);
        return kvl_report(nullptr, d, v, json_out, report);
    });
}

hfg_status hfg_constants(const hfg_group* g, int order_cap, int json_out, char** report) {
    return guarded([&]() -> hfg_status {
        if (!g) throw hfg::InputError("null group");
        auto r = hfg::compute_mu_t(*g->impl, order_cap > 0 ? order_cap : 12);
        if (json_out) {
            json covers = json::array();
            for (const auto& part : r.t_cover) covers.push_back(subset_json(*g->impl, part));
            json covers0 = json::array();
            for (const auto& part : r.t0_cover) covers0.push_back(subset_json(*g->impl, part));
            set_report(report, json({{"mu", r.mu},
                                     {"t", r.t},
                                     {"mu0", r.mu0},
                                     {"t0", r.t0},
                                     {"mu_witness", subset_json(*g->impl, r.mu_witness)},
                                     {"t_cover", std::move(covers)},
                                     {"mu0_witness", subset_json(*g->impl, r.mu0_witness)},
                                     {"t0_cover", std::move(covers0)},
                                     {"max_atom_len", r.max_atom_len}})
                                   .dump(2) +
                                   "\n");
        } else {
            std::ostringstream out;
            auto list = [&](const std::vector<int>& e) {
                std::string s = "{";
                for (size_t i = 0; i < e.size(); ++i)
                    s += (i ? "," : "") + g->impl->element_name(e[i]);
                return s + "}";
            };
            out << "mu = " << r.mu << "  witness " << list(r.mu_witness) << "\n";
            out << "t = " << r.t << "  cover:";
            for (const auto& part : r.t_cover) out << " " << list(part);
            out << "\nmu0 = " << r.mu0 << "  witness " << list(r.mu0_witness) << "\n";
            out << "t0 = " << r.t0 << "  cover:";
            for (const auto& part : r.t0_cover) out << " " << list(part);
            out << "\nmax atom length over G\\{e}: " << r.max_atom_len << "\n";
            set_report(report, out.str());
        }
        return HFG_OK;
    });
}

hfg_status hfg_bounds(const char* digraph_text, int max_edges, int json_out, char** report) {
    return guarded([&]() -> hfg_status {
        if (!digraph_text) throw hfg::InputError("null digraph text");
        hfg::WeightedDigraph d = hfg::parse_digraph(digraph_text);
        auto r = hfg::check_coloring_bounds(d, std::nullopt, max_edges > 0 ? max_edges : 12);
        if (json_out) {
            set_report(report,
                       json({{"edges", r.edge_count},
                             {"delta", r.delta},
                             {"chi_prime", r.chi_prime},
                             {"t", r.t},
                             {"mu", r.mu},
                             {"e_over_chi", hfg::rational_to_string(r.e_over_chi)},
                             {"t_le_chi", r.t_le_chi},
                             {"t_le_delta_plus_one", r.t_le_delta_plus_one},
                             {"chi_in_vizing_range", r.chi_in_vizing_range},
                             {"mono_classes_up", r.mono_classes_up},
                             {"mu_le_e_over_chi", r.mu_le_e_over_chi},
                             {"edge_colors", r.edge_colors}})
                           .dump(2) +
                           "\n");
        } else {
            std::ostringstream out;
            out << "|E| = " << r.edge_count << ", Delta = " << r.delta
                << ", chi' = " << r.chi_prime << "\n";
            out << "t = " << r.t << " <= chi' = " << r.chi_prime << ": "
                << (r.t_le_chi ? "holds" : "FAILS") << "\n";
            out << "t = " << r.t << " <= Delta+1 = " << r.delta + 1 << ": "
                << (r.t_le_delta_plus_one ? "holds" : "FAILS") << "\n";
            out << "chi' in {Delta, Delta+1}: " << (r.chi_in_vizing_range ? "holds" : "FAILS")
                << "\n";
            out << "monochromatic classes UP: " << (r.mono_classes_up ? "holds" : "FAILS") << "\n";
            out << "mu = " << r.mu << " vs |E|/chi' = " << hfg::rational_pretty(r.e_over_chi)
                << " (comparison reported, not asserted): mu <= |E|/chi' is "
                << (r.mu_le_e_over_chi ? "true" : "false") << "\n";
            set_report(report, out.str());
        }
        return HFG_OK;
    });
}

hfg_status hfg_verify_theorems(int max_order, int json_out, char** report) {
    return guarded([&]() -> hfg_status {
        if (max_order < 1) throw hfg::InputError("max order must be >= 1");
        if (max_order > 12) throw hfg::LimitError("theorem sweep capped at order 12");
        auto sweep = hfg::sweep_theorems(max_order);
        bool ok = sweep.hf_geodetic_mismatches == 0 && sweep.whf_kvl_mismatches == 0 &&
                  sweep.oracle_mismatches == 0;
        if (json_out) {
            set_report(report, json({{"groups", sweep.groups},
                                     {"subsets", sweep.subsets},
                                     {"hf_geodetic_mismatches", sweep.hf_geodetic_mismatches},
                                     {"whf_kvl_mismatches", sweep.whf_kvl_mismatches},
                                     {"oracle_mismatches", sweep.oracle_mismatches},
                                     {"details", sweep.mismatch_details}})
                                   .dump(2) +
                                   "\n");
        } else {
            std::ostringstream out;
            out << "groups: " << sweep.groups << ", subsets: " << sweep.subsets << "\n";
            out << "HF == geodetical mismatches: " << sweep.hf_geodetic_mismatches << "\n";
            out << "WHF == KVL mismatches: " << sweep.whf_kvl_mismatches << "\n";
            out << "geodetic single-source vs all-pairs mismatches: " << sweep.oracle_mismatches
                << "\n";
            for (const auto& dtl : sweep.mismatch_details) out << "  " << dtl << "\n";
            set_report(report, out.str());
        }
        return ok ? HFG_OK : HFG_FAIL;
    });
}

const char* hfg_last_error(void) { return g_last_error.c_str(); }

void hfg_free_string(char* s) { std::free(s); }

}  // extern "C"
