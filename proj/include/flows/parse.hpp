#pragma once

#include <string>

#include "flows/rf.hpp"

namespace flows {

// Input grammar shared with the CLI: integers, rationals p/q, variables x y,
// operators + - * / ^ (integer exponents), parentheses. Throws parse_error.
RF parse_rf(const std::string& text);

// parse_rf restricted to polynomial results.
Poly parse_poly(const std::string& text);

std::string to_string(const Poly& p);
std::string to_string(const RF& f);
std::string to_string(const Poly1& p, const std::string& var = "x");
std::string to_string(const RF1& f, const std::string& var = "x");

} // namespace flows
