#pragma once

#include <string_view>

namespace roughset::autopilot::data {

extern const std::string_view kPayloadTable1;
extern const std::string_view kPayloadTable2;
extern const std::string_view kPayloadTable3;
extern const std::string_view kPayloadTable4;
extern const std::string_view kPayloadTable5;
extern const std::string_view kTrainingTable;
extern const std::string_view kPaperRules;

}  // namespace roughset::autopilot::data
