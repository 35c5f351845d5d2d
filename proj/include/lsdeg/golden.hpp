#pragma once

#include "lsdeg/catalog.hpp"
#include "lsdeg/invariants.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace lsdeg {

// Expected invariants of one node at given slot values, as printed in the invariants table.
struct Table1Expectation {
    int orbit_dim = 0;
    int gamma_rank = 0;
    std::pair<int, int> derived{0, 0};
    // Checked grid entries only; nullopt means "does not exist".
    std::map<std::pair<int, int>, std::optional<GaussianRational>> ij;
};

Table1Expectation table1_expectation(const std::string& node, const std::vector<GaussianRational>& slots,
                                     const IJGrid& grid = default_grid());
// Slot values at which the delta terms of the derived-dimension column switch on.
std::vector<std::vector<GaussianRational>> table1_probes(const std::string& node);

struct Table1Check {
    std::string node;
    std::vector<GaussianRational> slots;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

Table1Check check_table1(const std::string& node, const std::vector<GaussianRational>& slots,
                         const CertifierConfig& cfg = {});

// One non-degeneration claim. Parameters are expressions in the symbols a, b, c.
struct Table2Row {
    std::string g_entry;
    std::vector<std::string> g_params;
    std::string h_entry;
    std::vector<std::string> h_params;
    std::vector<std::string> query;  // alpha, beta, gamma at parity 1; empty for functor rows
    std::optional<int> g_dim, h_dim;
    std::string functor;  // "F" or "ab" for functor rows
    std::string ident_entry;  // functor(g) is claimed isomorphic to this
    std::vector<std::string> ident_params;

    std::string g_text() const;
    std::string h_text() const;
    std::string ident_text() const;
};

const std::vector<Table2Row>& table2_rows();

struct Table2Check {
    const Table2Row* row = nullptr;
    std::map<std::string, GaussianRational> values;
    std::string g_label, h_label;
    std::optional<NondegenerationCertificate> certificate;
    std::optional<int> g_dim, h_dim;
    bool dims_match = true;
    bool identification_ok = true;
    std::vector<std::string> notes;
    bool ok() const { return certificate && dims_match && identification_ok; }
};

std::vector<Table2Check> check_table2(std::uint64_t seed = kDefaultSeed, const CertifierConfig& cfg = {});

// Exact equality up to swapping e1<->e2 and/or f1<->f2.
bool equal_up_to_relabel(const Algebra& a, const Algebra& b);

const std::vector<std::string>& expected_components();
// Components when the family-parameter witnesses are withheld.
const std::vector<std::string>& expected_ablation_components();
const std::vector<std::string>& expected_rigid();
// Reduced edges (from, to, constraint) of the verified degeneration order.
const std::vector<std::tuple<std::string, std::string, std::string>>& expected_hasse();

}  // namespace lsdeg
