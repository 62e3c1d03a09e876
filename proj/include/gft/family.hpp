#pragma once

#include <optional>
#include <string_view>

namespace gft {

/// Function families. Each has a test functional normalised so that
/// membership at order alpha means functional >= alpha:
///   C       Re(1 + z f''/f')
///   Sstar   Re(z f'/f)
///   BC     -Re(1 + z f''/f')
///   BSstar -Re(z f'/f)
///   BCI     Re(1 + z g''/g' - 2 z g'/g)
enum class Family { C, Sstar, BC, BSstar, BCI };

inline constexpr Family kAllFamilies[] = {Family::C, Family::Sstar, Family::BC, Family::BSstar, Family::BCI};

std::string_view to_string(Family f) noexcept;
/// Accepts the CLI spellings: c, sstar, bc, bsstar, bci (case-insensitive).
std::optional<Family> parse_family(std::string_view text) noexcept;

}  // namespace gft
