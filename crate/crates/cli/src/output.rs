//! Wire formats: the JSON-lines record and the matrix renderers.

use clap::ValueEnum;
use markov_cluster::{c_matrix, g_matrix, FareyTriple, Mat3, MatrixJson, MutationWord};
use serde::{Deserialize, Serialize};

/// How a matrix is rendered on stdout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixFormat {
    /// Labeled blocks with aligned columns.
    Pretty,
    /// One JSON object.
    Json,
    /// One `part,row,...` line per matrix row.
    Csv,
}

/// One enumerated vertex of the mutation tree, every integer as a decimal
/// string so that entries of any size survive JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    /// The components in slot order `(q0, qm1, qinf)`.
    pub triple: [String; 3],
    /// The reduced mutation word from the initial triple, letter by letter.
    pub word: Vec<String>,
    /// Principal part of the extended exchange matrix, row-major.
    pub principal: Vec<Vec<String>>,
    /// Complementary part (the c-vectors as columns), row-major.
    pub complementary: Vec<Vec<String>>,
    /// The g-matrix, row-major.
    pub g: Vec<Vec<String>>,
    /// Length of `word`.
    pub depth: usize,
}

impl OutputRecord {
    /// Computes both closed-form matrices of `triple` and packs them with
    /// the canonical word.
    pub fn build(triple: &FareyTriple, word: &MutationWord) -> Result<Self, String> {
        let matrix = c_matrix(triple).map_err(|e| e.to_string())?;
        let g = g_matrix(triple).map_err(|e| e.to_string())?;
        let parts = MatrixJson::from(&matrix);
        Ok(OutputRecord {
            triple: [
                triple.q0().to_string(),
                triple.qm1().to_string(),
                triple.qinf().to_string(),
            ],
            word: word.iter().map(|k| k.to_string()).collect(),
            principal: parts.principal,
            complementary: parts.complementary,
            g: mat3_rows(&g.0),
            depth: word.len(),
        })
    }

    /// The triple in its canonical comma-joined form.
    pub fn triple_string(&self) -> String {
        self.triple.join(",")
    }
}

/// Row-major decimal strings of a 3x3 matrix.
pub fn mat3_rows(m: &Mat3) -> Vec<Vec<String>> {
    m.rows().iter().map(|row| row.iter().map(ToString::to_string).collect()).collect()
}

/// The g-only JSON shape: just the context and the g-matrix.
#[derive(Serialize)]
struct GOnly<'a> {
    triple: &'a [String; 3],
    word: &'a [String],
    g: &'a [Vec<String>],
}

/// Renders one record in the requested format; `g_only` drops the exchange
/// matrix and keeps the g-matrix.
pub fn render_matrix(record: &OutputRecord, g_only: bool, format: MatrixFormat) -> String {
    match format {
        MatrixFormat::Pretty => {
            if g_only {
                return format!("{}\n", aligned(&record.g));
            }
            format!(
                "triple: {}\nword: {}\nprincipal:\n{}\ncomplementary:\n{}\ng:\n{}\n",
                record.triple_string(),
                record.word.join(","),
                aligned(&record.principal),
                aligned(&record.complementary),
                aligned(&record.g),
            )
        }
        MatrixFormat::Json => {
            let rendered = if g_only {
                serde_json::to_string(&GOnly {
                    triple: &record.triple,
                    word: &record.word,
                    g: &record.g,
                })
            } else {
                serde_json::to_string(record)
            };
            let mut line = rendered.expect("string-only structures serialize");
            line.push('\n');
            line
        }
        MatrixFormat::Csv => {
            let mut out = String::from("part,row,0,-1,inf\n");
            let parts: &[(&str, &Vec<Vec<String>>)] = if g_only {
                &[("g", &record.g)]
            } else {
                &[
                    ("principal", &record.principal),
                    ("complementary", &record.complementary),
                    ("g", &record.g),
                ]
            };
            for (name, rows) in parts {
                for (i, row) in rows.iter().enumerate() {
                    out.push_str(&format!("{name},{i},{}\n", row.join(",")));
                }
            }
            out
        }
    }
}

/// Right-aligns string entries to the widest one, one row per line.
fn aligned(rows: &[Vec<String>]) -> String {
    let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
    rows.iter()
        .map(|row| {
            row.iter().map(|e| format!("{e:>width$}")).collect::<Vec<_>>().join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use markov_cluster::ParityClass;

    fn record(triple: &str) -> OutputRecord {
        let t: FareyTriple = triple.parse().unwrap();
        let word = t.path_to_initial().unwrap().reversed();
        OutputRecord::build(&t, &word).unwrap()
    }

    #[test]
    fn records_round_trip_through_json() {
        let rec = record("0/1,1/1,1/0");
        let line = serde_json::to_string(&rec).unwrap();
        let back: OutputRecord = serde_json::from_str(&line).unwrap();
        assert_eq!(back, rec);

        let reparsed: FareyTriple = back.triple_string().parse().unwrap();
        assert_eq!(reparsed.to_string(), "0/1,1/1,1/0");
        assert_eq!(back.word, vec!["-1"]);
        assert_eq!(back.depth, 1);
    }

    #[test]
    fn pretty_output_is_aligned_and_labeled() {
        let rendered = render_matrix(&record("0/1,1/1,1/0"), false, MatrixFormat::Pretty);
        assert!(rendered.starts_with("triple: 0/1,1/1,1/0\nword: -1\nprincipal:\n"));
        assert!(rendered.contains("complementary:\n 1  0  0\n 2 -1  0\n 0  0  1\n"));
        assert!(rendered.contains("g:\n 1  2  0\n 0 -1  0\n 0  0  1\n"));
    }

    #[test]
    fn g_only_pretty_output_is_just_the_matrix() {
        let rendered = render_matrix(&record("0/1,1/1,1/0"), true, MatrixFormat::Pretty);
        assert_eq!(rendered, " 1  2  0\n 0 -1  0\n 0  0  1\n");
    }

    #[test]
    fn csv_output_has_one_line_per_row() {
        let rendered = render_matrix(&record("0/1,-1/1,1/0"), false, MatrixFormat::Csv);
        let lines: Vec<&str> = rendered.lines().collect();
        assert_eq!(lines[0], "part,row,0,-1,inf");
        assert_eq!(lines.len(), 10);
        assert_eq!(lines[1], "principal,0,0,-2,2");
        assert_eq!(lines[4], "complementary,0,1,0,0");
        assert_eq!(lines[9], "g,2,0,0,1");
    }

    #[test]
    fn the_stored_word_is_canonical() {
        // A backtracking word and its reduction give the same record.
        let t = FareyTriple::initial()
            .mutate(ParityClass::Zero)
            .mutate(ParityClass::Zero)
            .mutate(ParityClass::MinusOne);
        let word = t.path_to_initial().unwrap().reversed();
        let rec = OutputRecord::build(&t, &word).unwrap();
        assert_eq!(rec.word, vec!["-1"]);
    }
}
