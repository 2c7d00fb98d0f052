#include "io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace hfg {

using nlohmann::json;

SubsetS parse_subset(const Group& g, const std::string& spec) {
    std::vector<int> elems;
    std::istringstream in(spec);
    std::string tuple;
    const auto* ab = dynamic_cast<const AbelianGroup*>(&g);
    while (std::getline(in, tuple, ';')) {
        std::vector<int> coords;
        std::istringstream tin(tuple);
        std::string tok;
        while (std::getline(tin, tok, ',')) {
            std::string t;
            for (char c : tok)
                if (!std::isspace(static_cast<unsigned char>(c))) t += c;
            if (t.empty()) continue;
            try {
                coords.push_back(std::stoi(t));
            } catch (const std::exception&) {
                throw InputError("malformed subset token: '" + tok + "'");
            }
        }
        if (coords.empty()) continue;
        if (ab) {
            elems.push_back(ab->index_of(coords));
        } else {
            if (coords.size() != 1)
                throw InputError("table group subsets use single element indices");
            elems.push_back(coords[0]);
        }
    }
    return SubsetS::of(g, std::move(elems));
}

std::string subset_to_string(const Group& g, const SubsetS& s) {
    const auto* ab = dynamic_cast<const AbelianGroup*>(&g);
    std::string out;
    for (size_t i = 0; i < s.elems.size(); ++i) {
        if (i) out += ";";
        if (ab) {
            auto c = ab->coords(s.elems[i]);
            for (size_t j = 0; j < c.size(); ++j) {
                if (j) out += ",";
                out += std::to_string(c[j]);
            }
        } else {
            out += std::to_string(s.elems[i]);
        }
    }
    return out;
}

namespace {

struct ParsedArcLine {
    Arc arc;
    long long residue = -1;
    bool has_residue = false;
};

ParsedArcLine parse_arc_line(const std::string& line, bool voltage) {
    std::istringstream in(line);
    ParsedArcLine out;
    std::string psi;
    if (!(in >> out.arc.from >> out.arc.to >> psi))
        throw InputError("malformed arc line: '" + line + "'");
    out.arc.weight = parse_rational(psi);
    if (voltage) {
        if (!(in >> out.residue)) throw InputError("arc line missing residue: '" + line + "'");
        out.has_residue = true;
    }
    int color;
    if (in >> color) out.arc.color = color;
    return out;
}

}  // namespace

WeightedDigraph parse_digraph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<Arc> arcs;
    while (std::getline(in, line)) {
        std::string stripped = line.substr(0, line.find('#'));
        if (stripped.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream lin(stripped);
        std::string head;
        lin >> head;
        if (head == "V") {
            if (!(lin >> n) || n < 0) throw InputError("malformed V header");
            continue;
        }
        if (n < 0) throw InputError("digraph file must start with 'V <n>'");
        arcs.push_back(parse_arc_line(stripped, false).arc);
    }
    if (n < 0) throw InputError("digraph file must start with 'V <n>'");
    return WeightedDigraph(n, std::move(arcs));
}

std::string digraph_to_string(const WeightedDigraph& d) {
    std::ostringstream out;
    out << "V " << d.vertex_count() << "\n";
    for (const Arc& a : d.arcs()) {
        out << a.from << " " << a.to << " " << rational_to_string(a.weight);
        if (a.color >= 0) out << " " << a.color;
        out << "\n";
    }
    return out.str();
}

std::pair<WeightedDigraph, VoltageAssignment> parse_voltage_digraph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    long long modulus = -1;
    std::vector<Arc> arcs;
    std::vector<long long> residues;
    while (std::getline(in, line)) {
        std::string stripped = line.substr(0, line.find('#'));
        if (stripped.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream lin(stripped);
        std::string head;
        lin >> head;
        if (head == "V") {
            if (!(lin >> n) || n < 0) throw InputError("malformed V header");
            continue;
        }
        if (head == "N") {
            if (!(lin >> modulus) || modulus < 1) throw InputError("malformed N header");
            continue;
        }
        if (n < 0 || modulus < 0) throw InputError("voltage file needs 'V <n>' and 'N <modulus>' headers");
        auto parsed = parse_arc_line(stripped, true);
        if (parsed.residue < 0 || parsed.residue >= modulus)
            throw InputError("residue out of range [0, N): '" + stripped + "'");
        arcs.push_back(parsed.arc);
        residues.push_back(parsed.residue);
    }
    if (n < 0 || modulus < 0) throw InputError("voltage file needs 'V <n>' and 'N <modulus>' headers");
    // arcs get sorted inside the digraph; keep residues aligned
    std::vector<size_t> order(arcs.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return std::tie(arcs[a].from, arcs[a].to) < std::tie(arcs[b].from, arcs[b].to);
    });
    std::vector<Arc> sorted_arcs;
    VoltageAssignment v;
    v.modulus = modulus;
    for (size_t i : order) {
        sorted_arcs.push_back(arcs[i]);
        v.residues.push_back(residues[i]);
    }
    return {WeightedDigraph(n, std::move(sorted_arcs)), std::move(v)};
}

std::string voltage_digraph_to_string(const WeightedDigraph& d, const VoltageAssignment& v) {
    if (v.residues.size() != d.arcs().size())
        throw InputError("voltage assignment does not cover every arc");
    std::ostringstream out;
    out << "V " << d.vertex_count() << "\n";
    out << "N " << v.modulus << "\n";
    for (size_t i = 0; i < d.arcs().size(); ++i) {
        const Arc& a = d.arcs()[i];
        out << a.from << " " << a.to << " " << rational_to_string(a.weight) << " " << v.residues[i];
        if (a.color >= 0) out << " " << a.color;
        out << "\n";
    }
    return out.str();
}

json digraph_to_json(const WeightedDigraph& d) {
    json arcs = json::array();
    for (const Arc& a : d.arcs()) {
        json ja = {{"from", a.from}, {"to", a.to}, {"psi", rational_to_string(a.weight)}};
        if (a.color >= 0) ja["color"] = a.color;
        arcs.push_back(std::move(ja));
    }
    return {{"vertices", d.vertex_count()}, {"arcs", std::move(arcs)}};
}

WeightedDigraph digraph_from_json(const json& j) {
    try {
        int n = j.at("vertices").get<int>();
        std::vector<Arc> arcs;
        for (const auto& ja : j.at("arcs")) {
            Arc a;
            a.from = ja.at("from").get<int>();
            a.to = ja.at("to").get<int>();
            a.weight = parse_rational(ja.at("psi").get<std::string>());
            if (ja.contains("color")) a.color = ja.at("color").get<int>();
            arcs.push_back(a);
        }
        return WeightedDigraph(n, std::move(arcs));
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed digraph JSON: ") + e.what());
    }
}

json path_to_json(const Group* g, const WeightedDigraph& d, const Path& p) {
    (void)d;
    json verts = json::array();
    for (int v : p.vertices) {
        if (g)
            verts.push_back(g->element_name(v));
        else
            verts.push_back(v);
    }
    return {{"vertices", std::move(verts)}, {"length", rational_to_string(p.length)}};
}

json atom_to_json(const Group& g, const Atom& a) {
    json entries = json::array();
    for (int x : a.block.entries) entries.push_back(g.element_name(x));
    return {{"entries", std::move(entries)}, {"cross", rational_to_string(a.cross)}};
}

std::string atom_to_line(const Group& g, const Atom& a) {
    return block_to_string(g, a.block) + " " + rational_to_string(a.cross);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace hfg
