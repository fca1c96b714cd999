#include "akb/serial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "akb/error.hpp"

namespace akb {

json partition_to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array");
    return Partition(j.get<std::vector<Int>>());
}

json abacus_to_json(const AbacusConfig& x) {
    return json{{"partition", partition_to_json(x.partition)}, {"charge", x.charge}};
}

AbacusConfig abacus_from_json(const json& j) {
    return {partition_from_json(j.at("partition")), j.at("charge").get<Int>()};
}

json multi_to_json(const MultiAbacus& m) {
    json comps = json::array();
    for (const auto& c : m.components) comps.push_back(partition_to_json(c.partition));
    return json{{"components", comps}, {"charges", m.charges()}};
}

MultiAbacus multi_from_json(const json& j) {
    const json& comps = j.at("components");
    std::vector<Int> charges = j.at("charges").get<std::vector<Int>>();
    if (!comps.is_array() || comps.size() != charges.size())
        throw std::invalid_argument("components and charges must have equal length");
    MultiAbacus m;
    m.components.reserve(charges.size());
    for (std::size_t k = 0; k < charges.size(); ++k)
        m.components.push_back({partition_from_json(comps[k]), charges[k]});
    return m;
}

json runner_to_json(const RunnerDecomposition& d) {
    json quot = json::array();
    for (const auto& p : d.quotient) quot.push_back(partition_to_json(p));
    return json{{"quotient", quot}, {"charges", d.charges}};
}

RunnerDecomposition runner_from_json(const json& j) {
    RunnerDecomposition d;
    for (const auto& p : j.at("quotient")) d.quotient.push_back(partition_from_json(p));
    d.charges = j.at("charges").get<std::vector<Int>>();
    if (d.quotient.size() != d.charges.size())
        throw std::invalid_argument("quotient and charges must have equal length");
    return d;
}

json step_to_json(const ChainStep& s) {
    switch (s.kind) {
        case ChainStep::Kind::Swap: return json{{"swap", s.runner}};
        case ChainStep::Kind::Shift: return json{{"shift", 1}};
        case ChainStep::Kind::Stretch: return json{{"stretch", s.stretch}};
    }
    throw std::logic_error("unknown step kind");
}

ChainStep step_from_json(const json& j) {
    if (j.contains("swap")) return swap_step(j.at("swap").get<int>());
    if (j.contains("shift")) {
        if (j.at("shift").get<Int>() != 1)
            throw std::invalid_argument("shift steps have unit size");
        return shift_step();
    }
    if (j.contains("stretch")) {
        ChainStep s;
        s.kind = ChainStep::Kind::Stretch;
        s.stretch = j.at("stretch").get<std::vector<Int>>();
        return s;
    }
    throw std::invalid_argument("unknown chain step");
}

json chain_to_json(const EquivalenceChain& c) {
    json steps = json::array();
    for (const auto& s : c.steps) steps.push_back(step_to_json(s));
    json pairing = json::array();
    for (const auto& [a, b] : c.pairing) pairing.push_back(json::array({a, b}));
    return json{{"steps", steps}, {"pairing", pairing}};
}

EquivalenceChain chain_from_json(const json& j) {
    EquivalenceChain c;
    for (const auto& s : j.at("steps")) c.steps.push_back(step_from_json(s));
    for (const auto& p : j.at("pairing"))
        c.pairing.emplace_back(p.at(0).get<std::size_t>(), p.at(1).get<std::size_t>());
    return c;
}

void write_block(std::ostream& out, const Block& b) {
    json header{{"e", b.e}, {"bs", b.charges}, {"n", b.n()}, {"residues", b.residues.counts}};
    out << header.dump() << '\n';
    for (const auto& m : b.members) out << multi_to_json(m).dump() << '\n';
}

std::string block_to_text(const Block& b) {
    std::ostringstream out;
    write_block(out, b);
    return out.str();
}

Block block_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty block file");
    json header = json::parse(line);

    Block b;
    b.e = header.at("e").get<int>();
    b.charges = header.at("bs").get<std::vector<Int>>();
    b.residues.counts = header.at("residues").get<std::vector<Int>>();
    if (b.residues.counts.size() != static_cast<std::size_t>(b.e))
        throw std::invalid_argument("residue counts must have one entry per class");
    Int n = header.at("n").get<Int>();
    if (b.residues.total() != n)
        throw std::invalid_argument("residue counts do not sum to n");

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        MultiAbacus m = multi_from_json(json::parse(line));
        if (m.charges() != b.charges)
            throw ChargeMismatch("member charges disagree with the block header");
        if (residue_multiset(m, b.e) != b.residues)
            throw std::invalid_argument("member residues disagree with the block header");
        b.members.push_back(std::move(m));
    }
    if (b.members.empty()) throw std::invalid_argument("block file lists no members");
    std::sort(b.members.begin(), b.members.end());
    return b;
}

json block_to_json(const Block& b) {
    json members = json::array();
    for (const MultiAbacus& m : b.members) members.push_back(multi_to_json(m));
    return json{{"e", b.e},
                {"bs", b.charges},
                {"n", b.n()},
                {"residues", b.residues.counts},
                {"members", members}};
}

Block block_from_json(const json& j) {
    Block b;
    b.e = j.at("e").get<int>();
    b.charges = j.at("bs").get<std::vector<Int>>();
    b.residues.counts = j.at("residues").get<std::vector<Int>>();
    if (b.residues.counts.size() != static_cast<std::size_t>(b.e))
        throw std::invalid_argument("residue counts must have one entry per class");
    for (const json& mj : j.at("members")) {
        MultiAbacus m = multi_from_json(mj);
        if (m.charges() != b.charges)
            throw ChargeMismatch("member charges disagree with the block header");
        if (residue_multiset(m, b.e) != b.residues)
            throw std::invalid_argument("member residues disagree with the block header");
        b.members.push_back(std::move(m));
    }
    if (b.members.empty()) throw std::invalid_argument("block lists no members");
    std::sort(b.members.begin(), b.members.end());
    return b;
}

Partition parse_partition(const std::string& s) {
    return Partition(parse_int_list(s));
}

std::vector<Int> parse_int_list(const std::string& s) {
    std::vector<Int> out;
    if (s.empty()) return out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        Int value = std::stoll(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad integer: " + item);
        out.push_back(value);
    }
    return out;
}

std::vector<Partition> parse_components(const std::string& s) {
    std::vector<Partition> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t bar = s.find('|', start);
        std::string piece = s.substr(start, bar == std::string::npos ? bar : bar - start);
        out.push_back(parse_partition(piece));
        if (bar == std::string::npos) break;
        start = bar + 1;
    }
    return out;
}

} // namespace akb
