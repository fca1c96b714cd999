#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "akb/abacus.hpp"
#include "akb/blocks.hpp"
#include "akb/rouquier.hpp"

namespace akb {

// Insertion-ordered JSON keeps emitted key order stable.
using json = nlohmann::ordered_json;

json partition_to_json(const Partition& p);
Partition partition_from_json(const json& j);

// {"partition":[...],"charge":s}
json abacus_to_json(const AbacusConfig& x);
AbacusConfig abacus_from_json(const json& j);

// {"components":[[...],...],"charges":[...]}
json multi_to_json(const MultiAbacus& m);
MultiAbacus multi_from_json(const json& j);

// {"quotient":[[...],...],"charges":[...]}
json runner_to_json(const RunnerDecomposition& d);
RunnerDecomposition runner_from_json(const json& j);

// {"swap":i} | {"shift":1} | {"stretch":[...]}
json step_to_json(const ChainStep& s);
ChainStep step_from_json(const json& j);

// {"steps":[...],"pairing":[[i,j],...]}
json chain_to_json(const EquivalenceChain& c);
EquivalenceChain chain_from_json(const json& j);

// Block files: a header line {"e":...,"bs":[...],"n":...,"residues":[...]}
// followed by one member per line.
void write_block(std::ostream& out, const Block& b);
std::string block_to_text(const Block& b);
// Parses and cross-checks each member against the header.
Block block_from_text(const std::string& text);

// Single-object form: {"e":...,"bs":[...],"n":...,"residues":[...],"members":[...]}
json block_to_json(const Block& b);
Block block_from_json(const json& j);

// CLI value parsing: partitions are comma-separated parts ("" is empty),
// components are '|'-separated partitions.
Partition parse_partition(const std::string& s);
std::vector<Int> parse_int_list(const std::string& s);
std::vector<Partition> parse_components(const std::string& s);

} // namespace akb
