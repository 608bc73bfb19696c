use serde_json::{json, Value};

use superweight::diagram::WeightDiagram;
use superweight::{Parity, Weight, Q};

/// Rendered output of one command in both modes.
pub struct Out {
    text: String,
    json: Value,
}

impl Out {
    pub fn new(text: String, json: Value) -> Out {
        Out { text, json }
    }

    pub fn lines(lines: &[String], json: Value) -> Out {
        let mut text = String::new();
        for l in lines {
            text.push_str(l);
            text.push('\n');
        }
        Out { text, json }
    }

    /// serde_json's default map is ordered, so keys come out sorted.
    pub fn emit(&self, json_mode: bool) {
        if json_mode {
            let mut v = match &self.json {
                Value::Object(m) => m.clone(),
                other => {
                    let mut m = serde_json::Map::new();
                    m.insert("result".into(), other.clone());
                    m
                }
            };
            v.insert("schema".into(), json!(1));
            println!("{}", Value::Object(v));
        } else {
            print!("{}", self.text);
        }
    }
}

pub fn q_json(x: Q) -> Value {
    Value::String(x.to_string())
}

pub fn weight_json(w: &Weight) -> Value {
    let xs = |v: &[Q]| v.iter().map(|x| q_json(*x)).collect::<Vec<_>>();
    json!({"left": xs(&w.left), "right": xs(&w.right)})
}

pub fn parity_json(p: Parity) -> Value {
    Value::String(p.to_string())
}

pub fn diagram_json(f: &WeightDiagram) -> Value {
    json!({"crosses": f.crosses(), "coreL": f.core_left(), "coreR": f.core_right()})
}
