#pragma once

#include <stdexcept>
#include <string>

namespace sodflux {

/// Base of every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Bad user-supplied parameters (grid, time step, gas, CLI flags).
class InvalidConfig : public Error
{
public:
  using Error::Error;
};

/// Base of the numerical failures. The CLI maps all of these to exit code 3.
class NumericalFailure : public Error
{
public:
  using Error::Error;
};

/// A density or pressure became non-positive (solver blow-up).
class NonPhysicalState : public NumericalFailure
{
public:
  using NumericalFailure::NumericalFailure;
};

/// Newton iteration for the star pressure hit its iteration cap.
class NoConvergence : public NumericalFailure
{
public:
  using NumericalFailure::NumericalFailure;
};

/// The pressure positivity condition fails; the Riemann solution contains vacuum.
class VacuumGenerated : public NumericalFailure
{
public:
  using NumericalFailure::NumericalFailure;
};

/// Density jump too small for a Rankine-Hugoniot speed.
class DegenerateJump : public NumericalFailure
{
public:
  using NumericalFailure::NumericalFailure;
};

} // namespace sodflux
