#pragma once

#include <string>
#include <vector>

#include "hkcones/chambers.hpp"

namespace hkcones {

/// Rank-2 fan picture: chambers as filled sectors with a legend, piece
/// boundaries as labeled rays. The plane is drawn in coordinates where the
/// ample class points straight up and q is diagonal, so the positive cone is
/// the 90 degree wedge around the vertical axis. Output is byte-stable.
std::string fan_svg(const HKModel& model, const std::vector<StabilityChamber>& chambers);

/// "3H-2δ" style label for a class in the model's basis.
std::string class_label(const HKModel& model, const DivisorClass& x);

}  // namespace hkcones
