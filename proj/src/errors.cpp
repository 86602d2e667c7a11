#include "dubovsky/errors.hpp"

#include <sstream>

namespace dubovsky {

namespace {

std::string blow_up_message(std::size_t step, double x, double y) {
  std::ostringstream os;
  os.precision(17);
  os << "solution blew up at step " << step << " (last finite state x=" << x
     << ", y=" << y << ")";
  return os.str();
}

}  // namespace

BlowUpError::BlowUpError(std::size_t step, double last_x, double last_y)
    : std::runtime_error(blow_up_message(step, last_x, last_y)),
      step_(step),
      last_x_(last_x),
      last_y_(last_y) {}

}  // namespace dubovsky
