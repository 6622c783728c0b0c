#pragma once

// Deliberately corrupted views for negative-control testing of the
// verifiers. Nothing here produces a valid Stanley prefix.

#include <cstdint>
#include <span>

#include "stanley/sequence.hpp"

namespace stanley::fault {

/// Membership bits set for `values` that are not in the terms index.
SequenceView with_phantom_members(const SequenceView& view, std::span<const std::uint64_t> values);

/// Membership bits cleared for `values`; the terms index keeps them.
SequenceView with_hidden_members(const SequenceView& view, std::span<const std::uint64_t> values);

/// `values` removed from both structures while the completeness bound stays.
/// Seed elements cannot be removed.
SequenceView without_terms(const SequenceView& view, std::span<const std::uint64_t> values);

}  // namespace stanley::fault
