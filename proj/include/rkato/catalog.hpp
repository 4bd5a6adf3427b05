#pragma once

#include <string>
#include <vector>

#include "rkato/fields.hpp"

namespace rkato {

// Text catalog format, one entry per line:
//   name | family | params | expected_alpha | domain
// '#' starts a comment. params and domain are 'key=value' lists separated by
// ';'. expected_alpha is a number or the word 'parallel'.
std::vector<FormField> parse_catalog(const std::string& text);
std::vector<FormField> load_catalog_file(const std::string& path);
const std::string& default_catalog_text();

// Named harmonic potentials for the grad_poly family.
Polynomial potential_preset(const std::string& name, int n);

}  // namespace rkato
