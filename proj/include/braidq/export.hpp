// JSON element table: [{id, canonical, order, theta}, ...].

#ifndef BRAIDQ_EXPORT_HPP_
#define BRAIDQ_EXPORT_HPP_

#include <string>

#include "braidq/group.hpp"

namespace braidq {

  // `canonical` is the token string of the canonical word (the Schreier
  // representative when no canonical form exists); theta is a signed list.
  [[nodiscard]] std::string element_table_json(GroupCtx const& g, int indent = 2);

}  // namespace braidq

#endif  // BRAIDQ_EXPORT_HPP_
