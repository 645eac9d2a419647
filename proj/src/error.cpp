#include "spanoid/error.hpp"

namespace spanoid {

int exit_code(const std::exception& e) {
  if (dynamic_cast<const CapacityError*>(&e)) return 2;
  if (dynamic_cast<const IoError*>(&e)) return 3;
  return 1;
}

}  // namespace spanoid
