#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fht/types.hpp"

namespace fht {

// One verified identity: the residual actually measured, the tolerance it
// was held to, and enough of the inputs to reproduce the number.
struct CheckRecord {
    std::string check_id;
    std::string anchor;  // identity family the residual certifies
    std::string inputs;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct Report {
    std::vector<CheckRecord> rows;

    void add(std::string check_id, std::string anchor, std::string inputs,
             double residual, double tolerance);
    bool all_pass() const;

    // header row + one line per record; the inputs field is quoted
    void write_csv(std::ostream& os) const;
    // one JSON object per line, same fields
    void write_jsonl(std::ostream& os) const;
};

// shortest round-trip decimal; complex as "re,im"
std::string fmt_double(double v);
std::string fmt_cplx(cplx v);

}  // namespace fht
