#include "braidq/export.hpp"

#include "json.hpp"

#include "braidq/hyperocta.hpp"

namespace braidq {

  std::string element_table_json(GroupCtx const& g, int indent) {
    auto           thetas = theta_table(g);
    nlohmann::json out    = nlohmann::json::array();
    for (auto e : g.elements()) {
      out.push_back({{"id", e.id},
                     {"canonical", to_tokens(name_word(g, e))},
                     {"order", element_order(g, e)},
                     {"theta", thetas[e.id - 1].images()}});
    }
    return out.dump(indent);
  }

}  // namespace braidq
