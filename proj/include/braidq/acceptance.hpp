// The fourteen end-to-end checks, shared by the acceptance binary and the
// `acceptance` CLI subcommand.

#ifndef BRAIDQ_ACCEPTANCE_HPP_
#define BRAIDQ_ACCEPTANCE_HPP_

#include <string>
#include <vector>

namespace braidq {

  struct CriterionResult {
    int         id = 0;
    std::string title;
    bool        pass = false;
    std::string detail;
  };

  inline constexpr int kCriteria = 14;

  [[nodiscard]] CriterionResult run_criterion(int id);
  // `PASS <id> <title>: <detail>` or `FAIL ...`
  [[nodiscard]] std::string format(CriterionResult const& r);

}  // namespace braidq

#endif  // BRAIDQ_ACCEPTANCE_HPP_
