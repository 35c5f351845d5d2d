#pragma once

#include "lsdeg/invariants.hpp"
#include "lsdeg/superalg.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace lsdeg {

struct CatalogEntry {
    std::string name;                 // LS0 .. LS19
    std::vector<std::string> params;  // slot names, e.g. {"alpha", "beta"}
    std::string iso_condition;        // recorded equivalence between parameter values
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(const std::string& name);

template <class S>
SuperAlgebra<S> instantiate_as(const std::string& name, const std::vector<S>& params);

Algebra instantiate(const std::string& name, const std::vector<GaussianRational>& params = {});

// A vertex of the degeneration graph: a whole family or one of its special fibres.
struct CatalogNode {
    std::string id;
    std::string entry;
    std::vector<std::string> slots;  // free parameters of the node
    // Entry parameter i is slot slot_of[i] of the node, or the constant fixed[i].
    std::vector<int> slot_of;
    std::vector<GaussianRational> fixed;
    int table_order = 0;

    std::vector<GaussianRational> entry_params(const std::vector<GaussianRational>& free) const;
    Algebra instantiate(const std::vector<GaussianRational>& free = {}) const;
};

const std::vector<CatalogNode>& catalog_nodes();
const CatalogNode& catalog_node(const std::string& id);
bool has_node(const std::string& id);
// Node containing the given instantiation of an entry.
std::string classify(const std::string& entry, const std::vector<GaussianRational>& params);
// Node holding generic members of an entry.
std::string generic_node(const std::string& entry);

// True when the recorded conditions make the two instantiations isomorphic.
bool recorded_isomorphic(const std::string& entry, const std::vector<GaussianRational>& p,
                         const std::vector<GaussianRational>& q);

std::vector<GaussianRational> special_values();

struct SpecializationPlan {
    std::uint64_t seed = kDefaultSeed;
    int samples = 5;
    std::map<std::string, std::vector<std::vector<GaussianRational>>> node_samples;
};

// Gaussian rational with nonzero imaginary part, never one of special_values().
GaussianRational draw_parameter(std::mt19937_64& gen);
SpecializationPlan make_plan(std::uint64_t seed = kDefaultSeed, int samples = 5);
std::uint64_t derive_seed(std::uint64_t seed, const std::string& tag);

struct Fingerprint {
    InvariantProfile self;
    std::map<Functor, InvariantProfile> functors;
    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const Algebra& a, const CertifierConfig& cfg = {});

struct Instantiation {
    std::string entry;
    std::vector<GaussianRational> params;
    std::string label() const;
};

struct DistinctnessRow {
    Instantiation a, b;
    std::string verdict;  // "separated", "recorded-isomorphic", "needs manual isomorphism analysis"
    std::string detail;
};

std::vector<DistinctnessRow> distinctness_report(const SpecializationPlan& plan, const CertifierConfig& cfg = {});

}  // namespace lsdeg
