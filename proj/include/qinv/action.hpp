#pragma once

#include "qinv/element.hpp"

#include <optional>
#include <string>

namespace qinv {

enum class Generator { E, F, K, Kinv, L, Linv };

std::optional<Generator> parse_generator(const std::string& name);
std::string generator_name(Generator g);

/// Action of U_q(gl(2)) on H_I: K, L diagonal, E and F by the twisted Leibniz
/// rule applied block by block.
Element act(Generator g, const Element& a);

/// E a = F a = 0 and K a = a.
bool is_invariant(const Element& a);

/// (ij) = q^{-1/2} x_i y_j - q^{1/2} y_i x_j.
Element bracket(int i, int j);

/// (ij)^n from the closed expansion; i < j required, n >= 0.
Element bracket_power(int i, int j, int n);

}  // namespace qinv
