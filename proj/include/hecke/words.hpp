#pragma once

#include <span>
#include <string>
#include <vector>

#include "hecke/proj_matrix.hpp"

namespace hecke {

enum class Letter { S, U, U2 };

using Word = std::vector<Letter>;

/// A word in S, U, U^2 whose product equals gamma modulo {±1}.
///
/// Built by continued-fraction reduction of the first column: shift by a
/// power of T, swap with S, repeat until the lower-left entry vanishes. The
/// result is freely reduced (SS and UU^2 pairs cancelled) but is not a normal
/// form. Throws std::domain_error unless det(gamma) = 1.
Word word_in_SU(const ProjMatrix& gamma);

ProjMatrix evaluate(std::span<const Letter> word);

std::string to_string(std::span<const Letter> word);

}  // namespace hecke
