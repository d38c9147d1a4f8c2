//! The record every command prints, in human text or JSON.

use std::collections::BTreeMap;

use serde::Serialize;

use genfact_core::{BigUint, FactoredNat, PrimeTable, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

/// One evaluation result. `value_decimal` is only populated while the value
/// fits the digit budget; `value_factored` is always present.
#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub function: String,
    pub parameters: BTreeMap<String, serde_json::Value>,
    pub value_decimal: Option<String>,
    pub value_factored: String,
    pub digit_count: u64,
    pub elapsed_ns: u64,
}

impl OutputRecord {
    pub fn from_factored(
        function: &str,
        parameters: BTreeMap<String, serde_json::Value>,
        value: &FactoredNat,
        max_digits: u64,
        elapsed_ns: u64,
    ) -> Self {
        let digit_count = value.digit_count();
        let value_decimal = value
            .to_biguint_budgeted(max_digits)
            .ok()
            .map(|v| v.to_string());
        OutputRecord {
            function: function.to_string(),
            parameters,
            value_decimal,
            value_factored: value.to_string(),
            digit_count,
            elapsed_ns,
        }
    }

    /// Record for a valuation result. A valuation of zero has no factored
    /// representation as a positive integer; the factored field carries "0"
    /// in that one case.
    pub fn from_valuation(
        primes: &PrimeTable,
        parameters: BTreeMap<String, serde_json::Value>,
        value: &BigUint,
        max_digits: u64,
        elapsed_ns: u64,
    ) -> Result<Self> {
        let decimal = value.to_string();
        let digit_count = decimal.len() as u64;
        let value_factored = if value == &BigUint::from(0u32) {
            "0".to_string()
        } else {
            FactoredNat::from_factorization(&primes.factorize(value)?).to_string()
        };
        Ok(OutputRecord {
            function: "valuation".to_string(),
            parameters,
            value_decimal: (digit_count <= max_digits).then_some(decimal),
            value_factored,
            digit_count,
            elapsed_ns,
        })
    }

    pub fn print(&self, format: OutputFormat) {
        match format {
            OutputFormat::Json => {
                println!("{}", serde_json::to_string(self).expect("record serializes"))
            }
            OutputFormat::Text => {
                println!("function: {}", self.function);
                for (k, v) in &self.parameters {
                    match v {
                        serde_json::Value::String(s) => println!("{k}: {s}"),
                        other => println!("{k}: {other}"),
                    }
                }
                match &self.value_decimal {
                    Some(d) => println!("value: {d}"),
                    None => println!("value: <not rendered: {} digits over budget>", self.digit_count),
                }
                println!("factored: {}", self.value_factored);
                println!("digits: {}", self.digit_count);
                println!("elapsed_ns: {}", self.elapsed_ns);
            }
        }
    }
}
