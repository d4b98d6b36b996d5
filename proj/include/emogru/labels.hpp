#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace emogru {

// The task's closed label set. Index order is fixed everywhere: confusion
// matrices, metrics, class weights and the model's output layer all use it.
enum class Label : int { happy = 0, sad = 1, angry = 2, others = 3 };

inline constexpr std::size_t kNumLabels = 4;

inline constexpr std::array<std::string_view, kNumLabels> kLabelNames = {
    "happy", "sad", "angry", "others"};

inline std::string_view to_string(Label l) {
  return kLabelNames[static_cast<std::size_t>(l)];
}

inline std::optional<Label> parse_label(std::string_view s) {
  for (std::size_t i = 0; i < kNumLabels; ++i) {
    if (s == kLabelNames[i]) return static_cast<Label>(i);
  }
  return std::nullopt;
}

}  // namespace emogru
