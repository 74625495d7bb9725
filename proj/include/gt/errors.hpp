#ifndef GT_ERRORS_HPP
#define GT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gt {

enum class errc {
  shape,
  anchor,
  parse,
  invalid_relation,
  unsatisfiable,
  critical_set,
  critical_tableau,
  order_undetermined,
  not_releasable,
  no_case_applies,
  not_in_basis,
  singular_row,
  not_realization,
  precondition_failed,
  budget,
  infinite_enumeration,
  internal,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace gt

#endif
