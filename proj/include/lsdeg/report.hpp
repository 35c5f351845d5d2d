#pragma once

#include "lsdeg/graph.hpp"
#include "lsdeg/invariants.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lsdeg {

struct ReportOptions {
    std::uint64_t seed = kDefaultSeed;
    int samples = 5;
    bool skip_table4 = false;
    std::optional<std::vector<std::string>> nodes;  // all catalog nodes when unset
};

struct RunReport {
    std::string json;  // sorted keys, schema 1
    std::string dot;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

RunReport reproduce(const ReportOptions& opt = {});

// Verified built-in witnesses, graph with certificates, and the rigid flags used by components().
struct StandardGraph {
    SpecializationPlan plan;
    std::vector<VerifiedDegeneration> verified;
    DegenerationGraph graph;
    std::map<std::string, bool> rigid;
};

StandardGraph standard_graph(const ReportOptions& opt = {});

// The two cocycles listed for the rigid algebras, in wedge notation.
struct ListedCocycle {
    std::string node;
    std::string text;
};
const std::vector<ListedCocycle>& listed_cocycles();

}  // namespace lsdeg
