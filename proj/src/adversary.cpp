#include "dcnet/adversary.hpp"

namespace dcnet {

std::vector<NamedStrategy> shipped_strategies() {
  return {
      {"honest", AdversaryStrategy::uniform(Deviation::honest())},
      {"refuse", AdversaryStrategy::uniform(Deviation::refuse())},
      {"announce0", AdversaryStrategy::uniform(Deviation::announce_constant(0))},
      {"announce1", AdversaryStrategy::uniform(Deviation::announce_constant(1))},
      {"announce_random", AdversaryStrategy::uniform(Deviation::announce_random())},
      {"flip_third", AdversaryStrategy::uniform(Deviation::override_flip(1, 3))},
      {"flip_always", AdversaryStrategy::uniform(Deviation::override_flip(1, 1))},
      {"tamper_all", AdversaryStrategy::uniform(Deviation::tamper_bits({1}))},
      {"tamper_alternate", AdversaryStrategy::uniform(Deviation::tamper_bits({1, 0, 1}))},
  };
}

}  // namespace dcnet
