#pragma once

#include <stdexcept>
#include <string>

namespace asai {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// The requested operation is undefined for this duality setting.
class SettingError : public Error {
public:
  using Error::Error;
};

/// A character index whose Frobenius orbit is too small was passed where a
/// regular one is required.
class NonRegularInput : public Error {
public:
  using Error::Error;
};

/// An enumeration was requested over a modulus above the configured bound.
class ModulusTooLarge : public Error {
public:
  using Error::Error;
};

/// A required duality test failed on an input, or an internal duality
/// cross-check disagreed with its closed form.
class DualityViolation : public Error {
public:
  using Error::Error;
};

/// An asserted identity between two independent computation routes failed;
/// indicates a corrupted build.
class CrossCheckError : public Error {
public:
  using Error::Error;
};

/// A p-adic input datum violates a structural constraint.
class DatumError : public Error {
public:
  using Error::Error;
};

/// A quantity defined only for distinguished representations was requested
/// on a non-distinguished datum.
class NotDistinguishedInput : public Error {
public:
  using Error::Error;
};

/// A root of unity of order divisible by the coefficient characteristic
/// was requested.
class BadCharacteristic : public Error {
public:
  using Error::Error;
};

/// Two Euler factors over different coefficient characteristics were
/// combined.
class CharacteristicMismatch : public Error {
public:
  using Error::Error;
};

} // namespace asai
