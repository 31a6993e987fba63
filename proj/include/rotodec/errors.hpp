#pragma once

#include <stdexcept>
#include <string>

namespace rotodec
{
//! Input outside the domain of an operation (non-positive temperature,
//! non-unit direction, asymmetric tensor, ...).
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

//! A numerical procedure did not reach its tolerance.
class NumericError : public std::runtime_error
{
  public:
    NumericError(const std::string& what, double achieved_error)
        : std::runtime_error(what), achieved_error_(achieved_error)
    {
    }

    //! Error estimate at the point the procedure gave up.
    double achieved_error() const noexcept { return achieved_error_; }

  private:
    double achieved_error_;
};

//! A caller-supplied callback violated its documented contract.
class ContractError : public std::logic_error
{
  public:
    using std::logic_error::logic_error;
};

} // namespace rotodec
