#include "autopilot_data.hpp"

// Verbatim transcriptions of the case-study tables. The files under
// fixtures/ and rules/ are byte-identical copies (checked by the tests).

namespace roughset::autopilot::data {

const std::string_view kPayloadTable1 = R"csv(Roll inconsistency,Pitch inconsistency,Yaw inconsistency,Payload I Consistency
Yes,Yes,Yes,High
Yes,Yes,No,Moderate
Yes,No,Yes,Moderate
Yes,No,No,Low
No,Yes,Yes,Moderate
No,Yes,No,Moderate
No,No,Yes,Low
No,No,No,Extremely Low
)csv";

const std::string_view kPayloadTable2 = R"csv(Altitude inconsistency,Longitude inconsistency,Latitude inconsistency,Payload II Consistency
Yes,Yes,Yes,High
Yes,Yes,No,Moderate
Yes,No,Yes,Moderate
Yes,No,No,Low
No,Yes,Yes,Moderate
No,Yes,No,Moderate
No,No,Yes,Low
No,No,No,Extremely Low
)csv";

const std::string_view kPayloadTable3 = R"csv(Distance Measuring equipment fault,VHF Omnidirectional range fault,Inertial reference systems fault,Payload III Consistency
Yes,Yes,Yes,High
Yes,Yes,No,Moderate
Yes,No,Yes,Moderate
Yes,No,No,Low
No,Yes,Yes,Moderate
No,Yes,No,Moderate
No,No,Yes,Low
No,No,No,Extremely Low
)csv";

const std::string_view kPayloadTable4 = R"csv(Gyroscope instrument Failure,Accelerometers instrument Failure,Altimeters instrument Failure,Compass instrument Failure,Payload IV Consistency
Yes,Yes,Yes,Yes,High
Yes,Yes,Yes,No,Moderate
Yes,Yes,No,Yes,Moderate
Yes,Yes,No,No,Low
Yes,No,Yes,Yes,Moderate
Yes,No,Yes,No,Low
Yes,No,No,Yes,Low
Yes,No,No,No,Extremely low
No,Yes,Yes,Yes,Moderate
No,Yes,Yes,No,Low
No,Yes,No,Yes,Low
No,Yes,No,No,Extremely low
No,No,Yes,Yes,Low
No,No,Yes,No,Extremely Low
No,No,No,Yes,Extremely low
No,No,No,No,Extremely low
)csv";

const std::string_view kPayloadTable5 = R"csv(Flight Route Change,Flaps Failure,Fuel consumption inconsistency,Inflight Icing,Payload V Consistency
Yes,Yes,Yes,Yes,High
Yes,Yes,Yes,No,Moderate
Yes,Yes,No,Yes,Moderate
Yes,Yes,No,No,Low
Yes,No,Yes,Yes,Moderate
Yes,No,Yes,No,Low
Yes,No,No,Yes,Low
Yes,No,No,No,Extremely low
No,Yes,Yes,Yes,Moderate
No,Yes,Yes,No,Low
No,Yes,No,Yes,Low
No,Yes,No,No,Extremely low
No,No,Yes,Yes,Low
No,No,Yes,No,Extremely Low
No,No,No,Yes,Extremely low
No,No,No,No,Extremely low
)csv";

const std::string_view kTrainingTable = R"csv(S no.,A,B,C,D,E,C.F.
1.,High,High,High,High,High,Consistent
2.,Medium,High,High,High,High,Inconsistent
3.,High,Medium,High,Medium,High,Consistent
4.,High,High,High,Medium,High,Consistent
5.,High,High,Medium,High,High,Consistent
6.,Low,High,Medium,Medium,Medium,Inconsistent
7.,Medium,High,High,Medium,Medium,Inconsistent
8.,High,High,Medium,High,Medium,Consistent
9.,High,High,Medium,Medium,High,Consistent
10.,High,High,Medium,Medium,Medium,Consistent
11.,Very low,High,High,High,High,Inconsistent
12.,High,Low,High,High,Medium,Consistent
13.,High,Medium,Low,High,Medium,Consistent
14.,High,Low,High,Extremely low,Extremely low,Inconsistent
15.,High,Medium,Low,High,High,Consistent
16.,Low,Medium,High,Medium,Medium,Inconsistent
17.,Medium,Medium,Low,Medium,High,Inconsistent
18.,Low,Low,Medium,High,Medium,Inconsistent
19.,High,High,Extremely low,Medium,Extremely low,Inconsistent
20.,High,High,Extremely low,Medium,Medium,Inconsistent
21.,High,Medium,High,Medium,Medium,Consistent
22.,High,High,Extremely low,High,Extremely low,Consistent
23.,High,High,Medium,High,Extremely low,Inconsistent
24.,High,Medium,Medium,High,Extremely low,Consistent
25.,Extremely low,Extremely low,High,Medium,Low,Inconsistent
26.,High,High,Extremely low,Medium,High,Consistent
27.,High,Low,Low,High,High,Inconsistent
28.,High,High,Extremely low,Medium,Medium,Inconsistent
29.,High,Extremely low,Medium,Medium,High,Consistent
30.,Extremely low,Extremely low,Extremely low,Extremely low,Extremely low,Inconsistent
)csv";

const std::string_view kPaperRules = R"json([
  {
    "if": [
      {
        "attr": "Payload I",
        "value": "high"
      },
      {
        "attr": "Payload IV",
        "value": "medium"
      },
      {
        "attr": "Payload V",
        "value": "high"
      }
    ],
    "then": "Consistent"
  },
  {
    "if": [
      {
        "attr": "Payload I",
        "value": "high"
      },
      {
        "attr": "Payload II",
        "value": "high"
      },
      {
        "attr": "Payload IV",
        "value": "high"
      }
    ],
    "then": "Consistent"
  },
  {
    "if": [
      {
        "attr": "Payload I",
        "value": "high"
      },
      {
        "attr": "Payload II",
        "value": "medium"
      }
    ],
    "then": "Consistent"
  },
  {
    "if": [
      {
        "attr": "Payload I",
        "value": "high"
      },
      {
        "attr": "Payload II",
        "value": "low"
      },
      {
        "attr": "Payload V",
        "value": "medium"
      }
    ],
    "then": "Consistent"
  },
  {
    "if": [
      {
        "attr": "Payload I",
        "value": "high"
      },
      {
        "attr": "Payload III",
        "value": "medium"
      },
      {
        "attr": "Payload IV",
        "value": "medium"
      }
    ],
    "then": "Consistent"
  },
  {
    "if": [
      {
        "attr": "Payload III",
        "value": "extremely low"
      },
      {
        "attr": "Payload V",
        "value": "medium"
      }
    ],
    "then": "Inconsistent"
  },
  {
    "if": [
      {
        "attr": "Payload I",
        "value": "medium"
      }
    ],
    "then": "Inconsistent"
  },
  {
    "if": [
      {
        "attr": "Payload II",
        "value": "high"
      },
      {
        "attr": "Payload IV",
        "value": "low"
      }
    ],
    "then": "Inconsistent"
  },
  {
    "if": [
      {
        "attr": "Payload I",
        "value": "extremely low"
      }
    ],
    "then": "Inconsistent"
  },
  {
    "if": [
      {
        "attr": "Payload I",
        "value": "low"
      }
    ],
    "then": "Inconsistent"
  },
  {
    "if": [
      {
        "attr": "Payload IV",
        "value": "extremely low"
      }
    ],
    "then": "Inconsistent"
  },
  {
    "if": [
      {
        "attr": "Payload II",
        "value": "low"
      },
      {
        "attr": "Payload III",
        "value": "low"
      }
    ],
    "then": "Inconsistent"
  },
  {
    "if": [
      {
        "attr": "Payload IV",
        "value": "medium"
      },
      {
        "attr": "Payload V",
        "value": "extremely low"
      }
    ],
    "then": "Inconsistent"
  }
]
)json";

}  // namespace roughset::autopilot::data
