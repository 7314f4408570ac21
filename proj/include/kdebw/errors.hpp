#pragma once

#include <stdexcept>
#include <string>

namespace kdebw {

//! Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class NonPositiveBandwidth : public Error
{
public:
  explicit NonPositiveBandwidth(double h);
};

class NonPositiveRoughness : public Error
{
public:
  explicit NonPositiveRoughness(double roughness);
};

class GridTooLarge : public Error
{
public:
  GridTooLarge(std::size_t requested, std::size_t cap);
  std::size_t requested() const { return requested_; }

private:
  std::size_t requested_;
};

class GridTooSmall : public Error
{
public:
  using Error::Error;
};

//! Sample too small or with zero spread.
class DegenerateSample : public Error
{
public:
  using Error::Error;
};

//! Corrected roughness stayed non-positive after every allowed backoff.
class BackoffExhausted : public Error
{
public:
  using Error::Error;
};

//! Argument outside the domain of an analytic function.
class DomainError : public Error
{
public:
  using Error::Error;
};

class InvalidArgument : public Error
{
public:
  using Error::Error;
};

} // namespace kdebw
