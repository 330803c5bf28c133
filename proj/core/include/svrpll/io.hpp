#ifndef SVRPLL_IO_HPP_
#define SVRPLL_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "svrpll/instance.hpp"
#include "svrpll/model.hpp"
#include "svrpll/scenario.hpp"

namespace svrpll {

// Instance file:
//   {"targets":[[x,y],...],"sites":[[x,y],...],"sensing_range":r,
//    "landmark_cost":[...],"seed":s}
// Doubles are written with round-trip precision, so rewriting a parsed file
// reproduces it byte for byte.
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);  // IoError if malformed

// Solution file:
//   {"order":[0,...,0],"edges":[[i,j],...],"sites":[k,...],
//    "travel_cost":c,"landmark_cost":d,"objective":z}
std::string solution_to_json(const Solution& sol);
Solution solution_from_json(const std::string& text);

// Landmark cost override: a JSON array with one cost per site.
std::vector<double> costs_from_json(const std::string& text);

std::string read_file(const std::string& path);  // IoError on failure
void write_file(const std::string& path, const std::string& content);

inline constexpr const char* kTraceCsvHeader =
    "step,t,x,y,psi,xe,ye,psie,sxx,syy,spp,n_vis,wp,omega";

void write_trace_csv(std::ostream& os, const Trace& trace);

// RMSE, 3-sigma containment, visibility and completion fields.
std::string summary_json(const Trace& trace, const ErrorReport& report);

}  // namespace svrpll

#endif  // SVRPLL_IO_HPP_
