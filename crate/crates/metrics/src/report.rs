//! Per-sample metric tables with aggregate means, plus CSV/JSON emission.

use std::io::Write;

use serde::Serialize;

use crate::MetricError;

#[derive(Debug, Clone, Serialize)]
pub struct SampleMetrics {
    pub stem: String,
    pub nss: f64,
    pub auc_judd: f64,
    pub cc: f64,
    pub kld: f64,
}

/// A sample dropped from aggregation, with the metric error that caused it.
#[derive(Debug, Clone, Serialize)]
pub struct ExcludedSample {
    pub stem: String,
    pub reason: String,
}

/// Aggregate report: each mean is the arithmetic mean of its per-sample
/// column over the included samples.
#[derive(Debug, Clone, Serialize)]
pub struct MetricReport {
    pub nss: f64,
    pub auc_judd: f64,
    pub cc: f64,
    pub kld: f64,
    pub n_samples: usize,
    pub n_excluded: usize,
    pub per_sample: Vec<SampleMetrics>,
    pub excluded: Vec<ExcludedSample>,
}

impl MetricReport {
    pub fn from_rows(per_sample: Vec<SampleMetrics>, excluded: Vec<ExcludedSample>) -> Self {
        let n = per_sample.len();
        let mean = |f: fn(&SampleMetrics) -> f64| {
            if n == 0 {
                f64::NAN
            } else {
                per_sample.iter().map(f).sum::<f64>() / n as f64
            }
        };
        Self {
            nss: mean(|r| r.nss),
            auc_judd: mean(|r| r.auc_judd),
            cc: mean(|r| r.cc),
            kld: mean(|r| r.kld),
            n_samples: n,
            n_excluded: excluded.len(),
            per_sample,
            excluded,
        }
    }

    /// Emits `stem,nss,auc_judd,cc,kld` rows plus a final `MEAN` row.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<(), MetricError> {
        let mut wtr = csv::Writer::from_writer(w);
        wtr.write_record(["stem", "nss", "auc_judd", "cc", "kld"])
            .map_err(|e| MetricError::NumericalError(e.to_string()))?;
        for row in &self.per_sample {
            wtr.write_record([
                row.stem.as_str(),
                &row.nss.to_string(),
                &row.auc_judd.to_string(),
                &row.cc.to_string(),
                &row.kld.to_string(),
            ])
            .map_err(|e| MetricError::NumericalError(e.to_string()))?;
        }
        wtr.write_record([
            "MEAN",
            &self.nss.to_string(),
            &self.auc_judd.to_string(),
            &self.cc.to_string(),
            &self.kld.to_string(),
        ])
        .map_err(|e| MetricError::NumericalError(e.to_string()))?;
        wtr.flush()
            .map_err(|e| MetricError::NumericalError(e.to_string()))?;
        Ok(())
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
