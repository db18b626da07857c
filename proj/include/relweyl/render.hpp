#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "relweyl/decomposition.hpp"
#include "relweyl/normalization.hpp"
#include "relweyl/root_system.hpp"

namespace relweyl {

enum class Format { Csv, Json, Latex, Table };
Format parse_format(std::string_view text);
std::string extension(Format f);

std::string latex(const Rational& r);
std::string latex(const LinearTerm& t);

void render_system(const RootSystem& sys, std::ostream& out);
void render_action_table(const SystemPtr& sys, SimpleRootLabel removed, Format f, std::ostream& out);
void render_normtable(const SystemPtr& sys, SimpleRootLabel removed, Format f, std::ostream& out);
void render_trace(const DecompositionTrace& trace, Format f, std::ostream& out);

}  // namespace relweyl
