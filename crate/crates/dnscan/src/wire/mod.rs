//! RFC 1035 wire codec: query encoding, response decoding with name
//! compression, and the JSON record rendering shared by all output paths.
//!
//! Encoding never emits compression pointers; decoding accepts them. All
//! functions are pure and safe to call from any number of workers.

mod decode;
mod encode;
mod json;
pub mod name;
mod rdata;
pub mod rrtype;

pub use decode::{decode_message, decode_name};
pub use encode::{encode_message, encode_query};
pub(crate) use encode::encode_message_compressed;
pub use json::{record_to_json, RecordJson};
pub use name::DomainName;
pub use rdata::RData;
pub use rrtype::{class_code, class_mnemonic, type_code, type_mnemonic};

use serde::Serialize;
use thiserror::Error;

/// Wire codec failures. Decode errors carry the byte offset at which the
/// packet stopped making sense.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WireError {
    #[error("encoded name is {0} bytes, exceeding the 255-byte limit")]
    NameTooLong(usize),
    #[error("label length {0} outside 1..=63")]
    BadLabelLength(usize),
    #[error("invalid domain name: {0}")]
    BadName(String),
    #[error("packet truncated at byte {0}")]
    TruncatedPacket(usize),
    #[error("compression pointer loop at byte {0}")]
    PointerLoop(usize),
    #[error("compression pointer out of bounds at byte {0}")]
    PointerOutOfBounds(usize),
    #[error("reserved label type at byte {0}")]
    BadLabelType(usize),
    #[error("record data overruns its declared length at byte {0}")]
    RdataOverrun(usize),
}

/// Header flag bits and codes of a DNS message.
///
/// Field order matches the nine-key JSON object of the trace format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct MessageFlags {
    pub authenticated: bool,
    pub authoritative: bool,
    pub checking_disabled: bool,
    pub error_code: u8,
    pub opcode: u8,
    pub recursion_available: bool,
    pub recursion_desired: bool,
    pub response: bool,
    pub truncated: bool,
}

impl MessageFlags {
    pub(crate) fn to_u16(self) -> u16 {
        let mut bits = 0u16;
        if self.response {
            bits |= 1 << 15;
        }
        bits |= u16::from(self.opcode & 0x0f) << 11;
        if self.authoritative {
            bits |= 1 << 10;
        }
        if self.truncated {
            bits |= 1 << 9;
        }
        if self.recursion_desired {
            bits |= 1 << 8;
        }
        if self.recursion_available {
            bits |= 1 << 7;
        }
        if self.authenticated {
            bits |= 1 << 5;
        }
        if self.checking_disabled {
            bits |= 1 << 4;
        }
        bits |= u16::from(self.error_code & 0x0f);
        bits
    }

    pub(crate) fn from_u16(bits: u16) -> Self {
        MessageFlags {
            authenticated: bits & (1 << 5) != 0,
            authoritative: bits & (1 << 10) != 0,
            checking_disabled: bits & (1 << 4) != 0,
            error_code: (bits & 0x0f) as u8,
            opcode: ((bits >> 11) & 0x0f) as u8,
            recursion_available: bits & (1 << 7) != 0,
            recursion_desired: bits & (1 << 8) != 0,
            response: bits & (1 << 15) != 0,
            truncated: bits & (1 << 9) != 0,
        }
    }
}

/// A question section entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Question {
    pub name: DomainName,
    pub rrtype: u16,
    pub rrclass: u16,
}

impl Question {
    pub fn new(name: DomainName, rrtype: u16) -> Self {
        Question {
            name,
            rrtype,
            rrclass: rrtype::rrclass::IN,
        }
    }
}

/// A decoded resource record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResourceRecord {
    pub name: DomainName,
    pub rrtype: u16,
    pub rrclass: u16,
    pub ttl: u32,
    pub rdata: RData,
}

/// A decoded DNS message: header flags plus the three record sections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DnsMessage {
    pub id: u16,
    pub flags: MessageFlags,
    pub question: Option<Question>,
    pub answers: Vec<ResourceRecord>,
    pub authorities: Vec<ResourceRecord>,
    pub additionals: Vec<ResourceRecord>,
}

impl DnsMessage {
    pub fn response_to(query_id: u16, question: Option<Question>) -> Self {
        DnsMessage {
            id: query_id,
            flags: MessageFlags {
                response: true,
                ..Default::default()
            },
            question,
            answers: Vec::new(),
            authorities: Vec::new(),
            additionals: Vec::new(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_round_trip_bits() {
        for bits in [0u16, 0x8180, 0x8583, 0x0100, 0xffff] {
            let f = MessageFlags::from_u16(bits);
            // The Z bit (bit 6) is not modeled; mask it out of the comparison.
            assert_eq!(f.to_u16(), bits & !(1 << 6));
        }
    }

    #[test]
    fn flags_serialize_to_nine_keys() {
        let v = serde_json::to_value(MessageFlags::default()).unwrap();
        let obj = v.as_object().unwrap();
        let keys: Vec<&String> = obj.keys().collect();
        assert_eq!(
            keys,
            vec![
                "authenticated",
                "authoritative",
                "checking_disabled",
                "error_code",
                "opcode",
                "recursion_available",
                "recursion_desired",
                "response",
                "truncated"
            ]
        );
    }
}
