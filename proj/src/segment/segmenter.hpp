#ifndef SEMNET_SEGMENT_SEGMENTER_HPP
#define SEMNET_SEGMENT_SEGMENTER_HPP

#include <string>
#include <vector>

namespace semnet::seg {

// Abstract loudness track in dB over fixed-period samples; the codec side
// of the recording pipeline stays out of scope.
struct LoudnessEnvelope {
    double sample_period = 0.0; // seconds per sample
    std::vector<double> values; // dB, may be negative

    double duration() const {
        return sample_period * static_cast<double>(values.size());
    }
};

struct TriggerEvent {
    double time = 0.0; // seconds from stream start
    std::string kind;  // e.g. slide-change

    std::string id() const;
};

struct SegmenterConfig {
    double window = 10.0;               // cut search half-interval around a trigger
    double min_pause = 0.5;             // shortest usable pause
    double watermark_window = 60.0;     // trailing interval for the threshold
    double watermark_percentile = 0.20; // quantile taken as silence watermark
    double target_rms = -20.0;          // dB
    double max_pause = 1.0;             // pauses are clamped to this on normalize
};

struct Pause {
    double start = 0.0;
    double end = 0.0;

    double duration() const { return end - start; }
    double midpoint() const { return 0.5 * (start + end); }
};

struct Segment {
    double start = 0.0;
    double end = 0.0;
    std::string trigger; // id of the trigger whose cut opens the segment
};

// Maximal runs of samples strictly below the dynamic watermark (trailing
// percentile, clamped to stream start) lasting at least min_pause.
// Throws Error{EmptyInput} on an empty envelope.
std::vector<Pause> detect_pauses(const LoudnessEnvelope& env, const SegmenterConfig& config);

// Longest pause intersecting trigger ± window; ties go to the pause whose
// midpoint sits nearest the trigger, then to the earliest. The cut is the
// pause midpoint; with no qualifying pause it is the trigger time itself.
double select_cut(const TriggerEvent& trigger, const std::vector<Pause>& pauses,
                  const SegmenterConfig& config);

// Cuts per trigger delimit the segments; the stream start and end close
// the first and last one. Zero-length segments from coinciding cuts are
// dropped.
std::vector<Segment> segment(const LoudnessEnvelope& env,
                             const std::vector<TriggerEvent>& triggers,
                             const SegmenterConfig& config);

// Volume/pause rescaling: non-pause samples gain the constant dB offset
// that brings their RMS to target_rms; pauses longer than max_pause lose
// interior samples symmetrically. Never lengthens the stream.
LoudnessEnvelope normalize(const LoudnessEnvelope& env, const std::vector<Pause>& pauses,
                           const SegmenterConfig& config);

// Mean power of the samples, in dB.
double rms_db(const std::vector<double>& values_db);

// Envelope file {"sample_period": s, "values": [...]}; triggers file JSON
// list of {time, kind}.
LoudnessEnvelope envelope_from_json(const std::string& text);
LoudnessEnvelope load_envelope(const std::string& path);
std::string envelope_to_json(const LoudnessEnvelope& env);
std::vector<TriggerEvent> triggers_from_json(const std::string& text);
std::vector<TriggerEvent> load_triggers(const std::string& path);

} // namespace semnet::seg

#endif
