//! The five-key JSON record object used in results and traces.

use serde::Serialize;

use super::rrtype::{class_mnemonic, type_mnemonic};
use super::ResourceRecord;

/// JSON rendering of one resource record: exactly the keys
/// `answer`/`class`/`name`/`ttl`/`type`, with class and type as mnemonics and
/// the answer in zone-text presentation form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecordJson {
    pub answer: String,
    pub class: String,
    pub name: String,
    pub ttl: u32,
    #[serde(rename = "type")]
    pub rrtype: String,
}

pub fn record_to_json(rr: &ResourceRecord) -> RecordJson {
    RecordJson {
        answer: rr.rdata.presentation(),
        class: class_mnemonic(rr.rrclass),
        name: rr.name.presentation(),
        ttl: rr.ttl,
        rrtype: type_mnemonic(rr.rrtype),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wire::{RData, ResourceRecord};

    #[test]
    fn ns_record_keeps_trailing_dot_on_target_only() {
        let rr = ResourceRecord {
            name: "com".parse().unwrap(),
            rrtype: 2,
            rrclass: 1,
            ttl: 172800,
            rdata: RData::Ns("f.gtld-servers.net".parse().unwrap()),
        };
        let json = serde_json::to_value(record_to_json(&rr)).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "answer": "f.gtld-servers.net.",
                "class": "IN",
                "name": "com",
                "ttl": 172800,
                "type": "NS"
            })
        );
    }

    #[test]
    fn a_record_answer_has_no_trailing_dot() {
        let rr = ResourceRecord {
            name: "a.gtld-servers.net".parse().unwrap(),
            rrtype: 1,
            rrclass: 1,
            ttl: 172800,
            rdata: RData::A("192.5.6.30".parse().unwrap()),
        };
        let j = record_to_json(&rr);
        assert_eq!(j.answer, "192.5.6.30");
        assert_eq!(j.rrtype, "A");
        assert_eq!(j.name, "a.gtld-servers.net");
    }

    #[test]
    fn unknown_type_renders_hex_and_type_number() {
        let rr = ResourceRecord {
            name: "x.example".parse().unwrap(),
            rrtype: 65280,
            rrclass: 1,
            ttl: 60,
            rdata: RData::Raw(vec![0xde, 0xad]),
        };
        let j = record_to_json(&rr);
        assert_eq!(j.rrtype, "TYPE65280");
        assert_eq!(j.answer, "dead");
    }

    #[test]
    fn key_order_is_answer_class_name_ttl_type() {
        let rr = ResourceRecord {
            name: "com".parse().unwrap(),
            rrtype: 2,
            rrclass: 1,
            ttl: 1,
            rdata: RData::Ns("a.example".parse().unwrap()),
        };
        let line = serde_json::to_string(&record_to_json(&rr)).unwrap();
        let positions: Vec<usize> = ["\"answer\"", "\"class\"", "\"name\"", "\"ttl\"", "\"type\""]
            .iter()
            .map(|k| line.find(*k).unwrap())
            .collect();
        let mut sorted = positions.clone();
        sorted.sort_unstable();
        assert_eq!(positions, sorted);
    }
}
