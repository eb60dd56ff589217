// Desk-scale evaluation of the known labeling results for the Harary
// subfamilies: each row of the results table is re-checked using whichever
// evidence reaches it (closed-form recipe, analytic criterion, or exact
// search), and reports a status with the evidence spelled out.
#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace distmagic {

struct Table1Options {
    long long budget = 50'000'000; // nodes per oracle call
    int threads = 1;
};

struct Table1Row {
    std::string family;
    std::string claim;
    std::string status;   // confirmed | confirmed-at-small-scale |
                          // confirmed-analytically | not-checkable | refuted
    std::string evidence;
    bool refuted = false;
};

struct Table1Report {
    std::vector<Table1Row> rows;
    bool any_refuted() const;
};

Table1Report run_table1(const Table1Options& opts = {});

void print_report(std::ostream& os, const Table1Report& rep);
nlohmann::json report_to_json(const Table1Report& rep);

} // namespace distmagic
