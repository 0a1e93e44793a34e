#pragma once

#include <string>

namespace chebfilter {

/// Numbers in emitted CSV/JSON artifacts use '.' decimal separator and
/// 12 significant digits, so diffs of repeated runs are stable.
std::string format_number(double x);

}  // namespace chebfilter
