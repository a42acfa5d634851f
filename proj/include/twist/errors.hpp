#pragma once

#include <stdexcept>
#include <string>

namespace twist {

enum class Errc {
  NonPrimeModulus,
  ReducibleExtensionModulus,
  CharacteristicTwoOrThreeRejected,
  SpecMismatch,
  DivisionByZero,
  InadmissibleRank,
  NotARoot,
  NotAPositiveRoot,
  EqualOrOppositeRoots,
  NonPositiveRoot,
  WrongType,
  ZeroTorusCoordinate,
  ZeroEntry,
  SingularTwist,
  BadCharacteristic,
  SingularBlock,
  TooLarge,
  IncompatiblePair,
  WrongDimension,
  ZeroScalar,
  ValidationError,
  OracleMismatch,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace twist
