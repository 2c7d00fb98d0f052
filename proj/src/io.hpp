#pragma once

#include <json.hpp>
#include <string>
#include <utility>

#include "blocks.hpp"
#include "constants.hpp"
#include "digraph.hpp"
#include "voltage.hpp"

namespace hfg {

// Subset spec: semicolon-separated coordinate tuples, "1,0;0,1;1,1".
// For a TableGroup the tuples are single element indices.
SubsetS parse_subset(const Group& g, const std::string& spec);
std::string subset_to_string(const Group& g, const SubsetS& s);

// Digraph file: header "V <n>", then one arc per line
// "u v psi_num/psi_den [color]". Voltage file: same with an "N <modulus>"
// header line and a residue column, "u v psi_num/psi_den residue [color]".
WeightedDigraph parse_digraph(const std::string& text);
std::string digraph_to_string(const WeightedDigraph& d);
std::pair<WeightedDigraph, VoltageAssignment> parse_voltage_digraph(const std::string& text);
std::string voltage_digraph_to_string(const WeightedDigraph& d, const VoltageAssignment& v);

nlohmann::json digraph_to_json(const WeightedDigraph& d);
WeightedDigraph digraph_from_json(const nlohmann::json& j);

nlohmann::json path_to_json(const Group* g, const WeightedDigraph& d, const Path& p);
nlohmann::json atom_to_json(const Group& g, const Atom& a);
std::string atom_to_line(const Group& g, const Atom& a);

std::string read_file(const std::string& path);

}  // namespace hfg
