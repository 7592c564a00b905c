#pragma once

#include <string>

#include "flashcodes/buffer.hpp"
#include "flashcodes/constrate.hpp"
#include "flashcodes/indexless.hpp"
#include "flashcodes/staged.hpp"
#include "flashcodes/twobit.hpp"
#include "flashcodes/verifier.hpp"

namespace flashcodes::handles {

// Flat-state adapters so the verifier and CLI treat every scheme uniformly.
// Multi-region schemes expose their regions concatenated in serialization
// order (staged: parity then index; constrate: index group then parity group).
verifier::SchemeHandle make_twobit_handle(const twobit::TwoBitConfig& cfg);
verifier::SchemeHandle make_indexless_handle(const indexless::IndexlessConfig& cfg);
verifier::SchemeHandle make_staged_handle(const staged::StagedConfig& cfg);
verifier::SchemeHandle make_constrate_handle(const constrate::ConstRateConfig& cfg);
verifier::SchemeHandle make_buffer_handle(const buffer::BufferConfig& cfg);

// Builds the handle matching a serialized state's header line ("scheme=...").
verifier::SchemeHandle handle_from_state_text(const std::string& text);

}  // namespace flashcodes::handles
