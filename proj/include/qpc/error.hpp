//! \file qpc/error.hpp
#pragma once

#include <stdexcept>
#include <string>

namespace qpc
{
//---------------------------------------------------------------------------//
/*!
 * Domain error raised by library operations (bad arguments, singular
 * matrices, dimension mismatches, resource caps).
 */
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//! Throw qpc::Error with the given message unless the condition holds.
inline void require(bool cond, std::string const& msg)
{
    if (!cond)
        throw Error(msg);
}

}  // namespace qpc
