#pragma once

#include "lsdeg/degeneration.hpp"
#include "lsdeg/invariants.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lsdeg {

enum class EdgeKind { AllMembers, SpecialMember, FamilySweep };
// Which members of a node an edge end point reaches.
enum class Coverage { All, Sweep, Special };
// FamilyClosure edges come from a one-parameter path inside a family and do not compose.
enum class EdgeScope { Orbit, FamilyClosure };
enum class Provenance { WitnessVerified, TrivialScaling, TransitiveVia };

std::string kind_name(EdgeKind k);
std::string provenance_name(Provenance p);

struct DegenerationEdge {
    std::string from, to;
    EdgeKind kind = EdgeKind::AllMembers;
    std::string constraint;  // SpecialMember condition, or the swept parameter
    EdgeScope scope = EdgeScope::Orbit;
    Coverage source_cov = Coverage::All;
    Coverage target_cov = Coverage::All;
    std::string source_constraint, target_constraint;
    Provenance provenance = Provenance::WitnessVerified;
    std::string via;  // witness id or intermediate node

    bool direct() const { return provenance != Provenance::TransitiveVia; }
    std::string label() const;
};

DegenerationEdge edge_from_witness(const VerifiedDegeneration& v);

bool composable(const DegenerationEdge& e1, const DegenerationEdge& e2);
std::optional<DegenerationEdge> compose(const DegenerationEdge& e1, const DegenerationEdge& e2);
// True when a is preferred over b for the same ordered pair.
bool better_edge(const DegenerationEdge& a, const DegenerationEdge& b);

// Best edge per (from, to, scope), closed under composition of Orbit edges.
std::vector<DegenerationEdge> transitive_closure(const std::vector<DegenerationEdge>& edges);

struct DegenerationGraph {
    std::vector<std::string> nodes;
    std::vector<DegenerationEdge> edges;    // direct
    std::vector<DegenerationEdge> closure;  // direct plus composed
    std::map<std::pair<std::string, std::string>, NondegenerationCertificate> certificates;
    std::vector<std::string> collisions;

    const DegenerationEdge* best_edge(const std::string& from, const std::string& to) const;
};

struct GraphOptions {
    CertifierConfig cfg;
    bool certificates = true;
    bool strict = true;  // throw InconsistentGraph on collisions
};

DegenerationGraph build_graph(const std::vector<std::string>& nodes, const std::vector<VerifiedDegeneration>& verified,
                              const SpecializationPlan& plan, const GraphOptions& opt = {});

std::vector<DegenerationEdge> hasse_reduction(const DegenerationGraph& g);

struct ComponentEntry {
    std::string node;
    std::string justification;
    bool rigid = false;
};

struct ComponentReport {
    std::vector<ComponentEntry> components;
    std::map<std::string, DegenerationEdge> domination;
    std::vector<std::pair<std::string, std::string>> inconclusive;  // (candidate, unresolved rival)
};

ComponentReport components(const DegenerationGraph& g, const std::map<std::string, bool>& rigid = {});

std::string to_dot(const std::vector<std::string>& nodes, const std::vector<DegenerationEdge>& hasse,
                   const std::map<std::string, bool>& rigid = {});

}  // namespace lsdeg
