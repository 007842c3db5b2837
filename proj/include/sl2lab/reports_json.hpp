#pragma once

#include "sl2lab/concentration.hpp"
#include "sl2lab/json_out.hpp"
#include "sl2lab/prg.hpp"
#include "sl2lab/spectral.hpp"
#include "sl2lab/uniform_gap.hpp"
#include "sl2lab/word_search.hpp"

namespace sl2lab {

JsonValue element_json(const Element& e);
JsonValue pair_json(const Element& a, const Element& b);

JsonValue to_json(const SpectrumReport& r);
JsonValue to_json(const UniformGapReport& r, const GroupTable& table);
JsonValue to_json(const PrimeScanRecord& r);
JsonValue to_json(const ScanSummary& r);
JsonValue to_json(const BoundValues& r);
JsonValue to_json(const WalkEstimate& r);
JsonValue to_json(const AssignmentCountRecord& r);
JsonValue to_json(const FlatteningRecord& r);
JsonValue to_json(const ConcentrationReport& r);
JsonValue to_json(const ReplacementGraphReport& r, uint32_t p, uint32_t k);
JsonValue to_json(const SearchReport& r);
JsonValue to_json(const ExpansionReport& r);
JsonValue to_json(const CutChainRecord& r);

}  // namespace sl2lab
