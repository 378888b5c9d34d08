#include "matroidqq/oracle.hpp"

#include <string>

#include "matroidqq/errors.hpp"

namespace mqq {

void CountingOracle::charge_quantum(std::int64_t amount) {
  if (amount < 0) throw ParameterError("charge_quantum: negative amount " + std::to_string(amount));
  quantum_ += amount;
}

}  // namespace mqq
