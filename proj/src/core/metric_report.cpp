#include "fsdem/core/metric_report.hpp"

#include "fsdem/core/curve_metrics.hpp"

namespace fsdem {

MetricReport make_metric_report(const ObservationCurve& curve, const MetricRange& range,
                                std::string measure_id, std::string selector_id,
                                std::string dataset_id) {
    MetricReport report;
    report.fsdem = fsdem_score(curve, range);
    report.stability = stability_score(curve, range);
    report.range = range;
    report.measure_id = std::move(measure_id);
    report.selector_id = std::move(selector_id);
    report.dataset_id = std::move(dataset_id);
    for (const auto& p : curve.points()) {
        if (p.k >= range.a() && p.k <= range.b()) ++report.observation_count;
    }
    return report;
}

}  // namespace fsdem
