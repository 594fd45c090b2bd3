//! Fixed-precision rendering and the verification table rows.

use serde::Serialize;

use crate::closed_form::{
    circumradius_squared, inradius_squared, width_squared, ExactScalar, SimplexKind,
};
use crate::error::Result;

/// Significant digits used for every decimal the CLI prints.
pub const SIGNIFICANT_DIGITS: usize = 12;

/// Renders `x` in positional notation rounded to 12 significant digits
/// (round-half-even on the exact binary value). Trailing zeros after the
/// decimal point are dropped, keeping at least one digit: `1.0`, `0.5`,
/// `0.866025403784`.
pub fn format_decimal(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0.0".to_string();
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific notation");
    let exp: i64 = exp.parse().expect("integer exponent");
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let point = exp + 1;
    let width = digits.len() as i64;

    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if point <= 0 {
        out.push_str("0.");
        out.extend(std::iter::repeat_n('0', (-point) as usize));
        out.push_str(&digits);
    } else if point >= width {
        out.push_str(&digits);
        out.extend(std::iter::repeat_n('0', (point - width) as usize));
        out.push_str(".0");
    } else {
        out.push_str(&digits[..point as usize]);
        out.push('.');
        out.push_str(&digits[point as usize..]);
    }
    let trimmed = out.trim_end_matches('0');
    if trimmed.ends_with('.') {
        format!("{trimmed}0")
    } else {
        trimmed.to_string()
    }
}

/// A [`format_decimal`] string re-read as a float, for JSON output.
fn rounded(x: f64) -> f64 {
    format_decimal(x).parse().expect("rendered decimal parses")
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub n: usize,
    pub width_std_sq: ExactScalar,
    pub width_reg_sq: ExactScalar,
    pub width_reg: f64,
    pub inradius: f64,
    pub circumradius: f64,
    pub numeric_width: Option<f64>,
    pub abs_error: Option<f64>,
}

pub const CSV_COLUMNS: [&str; 7] = [
    "n",
    "parity",
    "width_std_sq",
    "width_reg_sq",
    "width_reg",
    "inradius",
    "circumradius",
];
pub const CSV_NUMERIC_COLUMNS: [&str; 2] = ["numeric_width", "abs_error"];

#[derive(Serialize)]
struct JsonRow<'a> {
    n: usize,
    parity: &'a str,
    width_std_sq: String,
    width_reg_sq: String,
    width_reg: f64,
    inradius: f64,
    circumradius: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    numeric_width: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    abs_error: Option<f64>,
}

impl TableRow {
    /// Closed-form columns for `n`; the numeric columns start empty.
    pub fn closed_form(n: usize) -> Result<Self> {
        let width_reg_sq = width_squared(n, SimplexKind::Regular)?;
        Ok(Self {
            n,
            width_std_sq: width_squared(n, SimplexKind::Standard)?,
            width_reg: width_reg_sq.sqrt_f64(),
            width_reg_sq,
            inradius: inradius_squared(n)?.sqrt_f64(),
            circumradius: circumradius_squared(n)?.sqrt_f64(),
            numeric_width: None,
            abs_error: None,
        })
    }

    pub fn with_numeric(mut self, numeric_width: f64) -> Self {
        self.abs_error = Some((numeric_width - self.width_reg).abs());
        self.numeric_width = Some(numeric_width);
        self
    }

    pub fn parity(&self) -> &'static str {
        if self.n % 2 == 1 {
            "odd"
        } else {
            "even"
        }
    }

    pub fn csv_header(include_numeric: bool) -> String {
        let mut cols: Vec<&str> = CSV_COLUMNS.to_vec();
        if include_numeric {
            cols.extend(CSV_NUMERIC_COLUMNS);
        }
        cols.join(",")
    }

    pub fn to_csv(&self) -> String {
        let mut fields = vec![
            self.n.to_string(),
            self.parity().to_string(),
            self.width_std_sq.to_string(),
            self.width_reg_sq.to_string(),
            format_decimal(self.width_reg),
            format_decimal(self.inradius),
            format_decimal(self.circumradius),
        ];
        if let (Some(w), Some(e)) = (self.numeric_width, self.abs_error) {
            fields.push(format_decimal(w));
            fields.push(format_decimal(e));
        }
        fields.join(",")
    }

    pub fn to_json(&self) -> String {
        let row = JsonRow {
            n: self.n,
            parity: self.parity(),
            width_std_sq: self.width_std_sq.to_string(),
            width_reg_sq: self.width_reg_sq.to_string(),
            width_reg: rounded(self.width_reg),
            inradius: rounded(self.inradius),
            circumradius: rounded(self.circumradius),
            numeric_width: self.numeric_width.map(rounded),
            abs_error: self.abs_error.map(rounded),
        };
        serde_json::to_string(&row).expect("row serializes")
    }
}
