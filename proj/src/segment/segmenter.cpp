#include "segment/segmenter.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "core/repository_json.hpp" // read_file
#include "support/error.hpp"

namespace semnet::seg {

using nlohmann::json;

namespace {

constexpr double kTimeEps = 1e-9;

void require_samples(const LoudnessEnvelope& env) {
    if (env.values.empty())
        throw Error(ErrorCode::EmptyInput, "loudness envelope has no samples");
    if (env.sample_period <= 0.0)
        throw Error(ErrorCode::EmptyInput, "sample period must be positive");
}

std::string format_time(double t) {
    std::ostringstream out;
    out << t;
    return out.str();
}

} // namespace

std::string TriggerEvent::id() const {
    return (kind.empty() ? std::string("trigger") : kind) + "@" + format_time(time);
}

std::vector<Pause> detect_pauses(const LoudnessEnvelope& env, const SegmenterConfig& config) {
    require_samples(env);
    const double period = env.sample_period;
    const std::size_t n = env.values.size();
    const std::size_t window_samples = static_cast<std::size_t>(
        std::max<long long>(1, std::llround(config.watermark_window / period)));

    // Trailing-window order statistics via a sorted sliding window.
    std::vector<double> window;
    window.reserve(window_samples);
    std::vector<bool> silent(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        window.insert(std::lower_bound(window.begin(), window.end(), env.values[i]),
                      env.values[i]);
        if (window.size() > window_samples) {
            double leaving = env.values[i - window_samples];
            window.erase(std::lower_bound(window.begin(), window.end(), leaving));
        }
        double quantile_index =
            config.watermark_percentile * static_cast<double>(window.size() - 1);
        double watermark = window[static_cast<std::size_t>(quantile_index)];
        silent[i] = env.values[i] < watermark;
    }

    std::vector<Pause> pauses;
    std::size_t run_start = 0;
    bool in_run = false;
    auto flush = [&](std::size_t end_index) {
        if (!in_run) return;
        in_run = false;
        double duration = static_cast<double>(end_index - run_start) * period;
        if (duration + kTimeEps >= config.min_pause)
            pauses.push_back(Pause{static_cast<double>(run_start) * period,
                                   static_cast<double>(end_index) * period});
    };
    for (std::size_t i = 0; i < n; ++i) {
        if (silent[i] && !in_run) {
            in_run = true;
            run_start = i;
        } else if (!silent[i]) {
            flush(i);
        }
    }
    flush(n);
    return pauses;
}

double select_cut(const TriggerEvent& trigger, const std::vector<Pause>& pauses,
                  const SegmenterConfig& config) {
    const double lo = trigger.time - config.window;
    const double hi = trigger.time + config.window;
    const Pause* best = nullptr;
    for (const auto& pause : pauses) {
        if (pause.end < lo - kTimeEps || pause.start > hi + kTimeEps) continue;
        if (!best) {
            best = &pause;
            continue;
        }
        if (pause.duration() != best->duration()) {
            if (pause.duration() > best->duration()) best = &pause;
            continue;
        }
        double d_new = std::abs(pause.midpoint() - trigger.time);
        double d_best = std::abs(best->midpoint() - trigger.time);
        if (d_new < d_best || (d_new == d_best && pause.start < best->start)) best = &pause;
    }
    return best ? best->midpoint() : trigger.time;
}

std::vector<Segment> segment(const LoudnessEnvelope& env,
                             const std::vector<TriggerEvent>& triggers,
                             const SegmenterConfig& config) {
    require_samples(env);
    auto pauses = detect_pauses(env, config);

    struct Cut {
        double time;
        std::string trigger;
    };
    std::vector<Cut> cuts;
    for (const auto& trigger : triggers) {
        double t = select_cut(trigger, pauses, config);
        t = std::clamp(t, 0.0, env.duration());
        cuts.push_back(Cut{t, trigger.id()});
    }
    std::stable_sort(cuts.begin(), cuts.end(),
                     [](const Cut& a, const Cut& b) { return a.time < b.time; });

    std::vector<Segment> segments;
    double start = 0.0;
    std::string opener = "-";
    for (const auto& cut : cuts) {
        if (cut.time > start) {
            segments.push_back(Segment{start, cut.time, opener});
            start = cut.time;
            opener = cut.trigger;
        }
        // coinciding cuts share one boundary; the first trigger keeps it
    }
    if (env.duration() > start)
        segments.push_back(Segment{start, env.duration(), opener});
    return segments;
}

double rms_db(const std::vector<double>& values_db) {
    double power = 0.0;
    for (double v : values_db) power += std::pow(10.0, v / 10.0);
    power /= static_cast<double>(values_db.size());
    return 10.0 * std::log10(power);
}

LoudnessEnvelope normalize(const LoudnessEnvelope& env, const std::vector<Pause>& pauses,
                           const SegmenterConfig& config) {
    require_samples(env);
    const double period = env.sample_period;
    const std::size_t n = env.values.size();

    std::vector<bool> in_pause(n, false);
    for (const auto& pause : pauses) {
        auto first = static_cast<std::size_t>(
            std::max<long long>(0, std::llround(pause.start / period)));
        auto stop = static_cast<std::size_t>(
            std::max<long long>(0, std::llround(pause.end / period)));
        for (std::size_t i = first; i < std::min(stop, n); ++i) in_pause[i] = true;
    }

    std::vector<double> speech;
    for (std::size_t i = 0; i < n; ++i)
        if (!in_pause[i]) speech.push_back(env.values[i]);
    double offset = speech.empty() ? 0.0 : config.target_rms - rms_db(speech);
    if (std::abs(offset) < 1e-12) offset = 0.0; // already on target



    const std::size_t keep = static_cast<std::size_t>(
        std::max<long long>(1, std::llround(config.max_pause / period)));

    LoudnessEnvelope out;
    out.sample_period = period;
    out.values.reserve(n);
    std::size_t i = 0;
    while (i < n) {
        if (!in_pause[i]) {
            out.values.push_back(env.values[i] + offset);
            ++i;
            continue;
        }
        std::size_t run_end = i;
        while (run_end < n && in_pause[run_end]) ++run_end;
        std::size_t run_len = run_end - i;
        if (run_len <= keep) {
            for (std::size_t j = i; j < run_end; ++j) out.values.push_back(env.values[j]);
        } else {
            // symmetric interior removal
            std::size_t head = (keep + 1) / 2;
            std::size_t tail = keep / 2;
            for (std::size_t j = i; j < i + head; ++j) out.values.push_back(env.values[j]);
            for (std::size_t j = run_end - tail; j < run_end; ++j)
                out.values.push_back(env.values[j]);
        }
        i = run_end;
    }
    return out;
}

LoudnessEnvelope envelope_from_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
        throw Error(ErrorCode::ParseError, "malformed envelope JSON");
    LoudnessEnvelope env;
    env.sample_period = doc.value("sample_period", 0.0);
    if (doc.contains("values"))
        for (const auto& v : doc.at("values")) env.values.push_back(v.get<double>());
    return env;
}

LoudnessEnvelope load_envelope(const std::string& path) {
    return envelope_from_json(read_file(path));
}

std::string envelope_to_json(const LoudnessEnvelope& env) {
    json doc = json::object();
    doc["sample_period"] = env.sample_period;
    doc["values"] = env.values;
    return doc.dump() + "\n";
}

std::vector<TriggerEvent> triggers_from_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_array())
        throw Error(ErrorCode::ParseError, "triggers file must be a JSON array");
    std::vector<TriggerEvent> out;
    for (const auto& entry : doc) {
        TriggerEvent t;
        t.time = entry.at("time").get<double>();
        t.kind = entry.value("kind", "trigger");
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(),
              [](const TriggerEvent& a, const TriggerEvent& b) { return a.time < b.time; });
    return out;
}

std::vector<TriggerEvent> load_triggers(const std::string& path) {
    return triggers_from_json(read_file(path));
}

} // namespace semnet::seg
