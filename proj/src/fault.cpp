#include "stanley/fault.hpp"

#include <algorithm>

#include "stanley/error.hpp"

namespace stanley::fault {

struct Access {
  static SequenceView::Data copy(const SequenceView& view) { return *view.data_; }
  static SequenceView make(SequenceView::Data data) {
    return SequenceView(std::make_shared<const SequenceView::Data>(std::move(data)));
  }
};

SequenceView with_phantom_members(const SequenceView& view, std::span<const std::uint64_t> values) {
  auto data = Access::copy(view);
  for (std::uint64_t v : values) {
    if (v < data.membership.base()) throw Error(ErrorCode::bad_input, "phantom member below the seed minimum");
    data.membership.grow_to_cover(v);
    data.membership.set(v);
  }
  return Access::make(std::move(data));
}

SequenceView with_hidden_members(const SequenceView& view, std::span<const std::uint64_t> values) {
  auto data = Access::copy(view);
  for (std::uint64_t v : values) data.membership.reset(v);
  return Access::make(std::move(data));
}

SequenceView without_terms(const SequenceView& view, std::span<const std::uint64_t> values) {
  auto data = Access::copy(view);
  const auto seed = data.seed.elements();
  for (std::uint64_t v : values) {
    if (std::binary_search(seed.begin(), seed.end(), v))
      throw Error(ErrorCode::bad_input, "cannot remove a seed element");
    data.membership.reset(v);
    std::erase(data.terms, v);
  }
  return Access::make(std::move(data));
}

}  // namespace stanley::fault
