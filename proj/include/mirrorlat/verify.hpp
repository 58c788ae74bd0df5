#pragma once

#include "mirrorlat/bhk.hpp"
#include "mirrorlat/mirror.hpp"
#include "mirrorlat/overlattice.hpp"
#include "mirrorlat/wps.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mirrorlat {

struct TableEntrySpec {
    Int g = 1;                                   // |G/J|
    std::string tag;                             // optional subgroup tag
    std::vector<std::vector<std::string>> gens;  // optional generators (rational strings)
    int r = 0;
    std::string q;
    std::string dual_row;
    Int dual_g = 0;        // 0 when the dual is tagged instead
    std::string dual_tag;  // optional
    std::string method;
};

struct TableRowSpec {
    std::string no;
    int yonemura = 0;
    WeightSystem ws;
    std::string polynomial;
    char sigma_var = 'w';
    Int sl_over_j = 1;
    std::vector<TableEntrySpec> entries;
};

struct TableSpec {
    Int m = 0;
    std::vector<TableRowSpec> rows;
};

struct Table1Row {
    std::string name;
    int t_plus = 0;
    int t_minus = 0;
    std::string q;
};

struct GeometryExpect {
    std::optional<int> r;
    std::optional<std::string> q;
    std::optional<std::string> gram_equals;
    std::optional<long> nontrivial_overlattices;
    std::optional<std::string> overlattice_q;
    std::optional<std::string> overlattice_lattice;
    std::vector<std::string> candidates;
    std::optional<std::string> picard;
    std::optional<std::string> eliminated;
    std::optional<std::string> general_member_picard;
    std::optional<std::string> lattice;
    std::optional<int> full_r;
    std::optional<std::string> full_q;
    std::optional<bool> primitive_in_full;
};

struct GeometrySpec {
    std::string id;
    Int table_m = 0;
    std::string row;
    Int g = 1;
    std::string method;
    std::string config_path;  // relative to the dataset directory
    GeometryExpect expect;
};

struct Dataset {
    std::vector<Table1Row> table1;
    std::vector<TableSpec> tables;
    std::vector<GeometrySpec> geometry;
    std::vector<std::pair<int, WeightSystem>> k3_systems;
    std::string base_dir;
};

// Loads table1.json, tables.json, geometry.json, weight_systems.json from a
// directory. The compiled-in default directory is used when dir is empty,
// unless MIRRORLAT_DATA_DIR is set in the environment.
Dataset load_dataset(const std::string& dir = "");
std::string default_data_dir();

struct CheckResult {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct RowReport {
    std::string id;
    std::vector<CheckResult> checks;
    bool ok() const;
};

struct VerificationReport {
    std::vector<RowReport> rows;
    bool ok() const;
    int failed_checks() const;
    int passed_checks() const;
};

VerificationReport verify_table1(const Dataset& data, const SearchBudget& budget = {});
VerificationReport verify_mirrors(const Dataset& data, std::optional<Int> only_m = std::nullopt,
                                  const SearchBudget& budget = {});
VerificationReport verify_geometry(const Dataset& data, const std::string& only_id = "",
                                   const SearchBudget& budget = {});
VerificationReport verify_all(const Dataset& data, const SearchBudget& budget = {});

VerificationReport merge(const std::vector<VerificationReport>& parts);

// Text and JSON renderings. The text rendering is a pure function of the
// JSON content: parsing the JSON back and re-rendering is byte-identical.
std::string render_text(const VerificationReport& report);
std::string render_json(const VerificationReport& report);
VerificationReport report_from_json(const std::string& json_text);

}  // namespace mirrorlat
