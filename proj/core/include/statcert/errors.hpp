#ifndef STATCERT_ERRORS_HPP
#define STATCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace statcert {

/** Malformed or inconsistent user input (bad file, infeasible point, ...). */
class InputError : public std::invalid_argument {
  public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/** Requested analysis needs data the problem does not carry (e.g. Hessians). */
class UnavailableError : public std::runtime_error {
  public:
    explicit UnavailableError(const std::string& what) : std::runtime_error(what) {}
};

/** Perturbation re-draws exhausted without reaching a nondegenerate run. */
class DegenerateInputError : public std::runtime_error {
  public:
    explicit DegenerateInputError(const std::string& what) : std::runtime_error(what) {}
};

/** A linear system that the caller's data cannot satisfy (e.g. gradient not in span). */
class NotRepresentableError : public std::runtime_error {
  public:
    explicit NotRepresentableError(const std::string& what) : std::runtime_error(what) {}
};

/** Internal consistency failure: an exact certificate did not verify. */
class CertificateError : public std::logic_error {
  public:
    explicit CertificateError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace statcert

#endif
