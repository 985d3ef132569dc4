//! Message encoding. The public encoders never emit compression pointers;
//! the crate-internal compressed variant exists for the mock servers, which
//! compress aggressively to exercise the decoder.

use std::collections::HashMap;

use super::name::DomainName;
use super::rdata::RData;
use super::rrtype::rrtype;
use super::{DnsMessage, MessageFlags, Question, ResourceRecord, WireError};

/// Builds a query packet for `q`. When `udp_payload_size` exceeds 512 an
/// EDNS0 OPT record advertising that size is appended.
pub fn encode_query(
    q: &Question,
    id: u16,
    recursion_desired: bool,
    udp_payload_size: u16,
) -> Result<Vec<u8>, WireError> {
    let mut msg = DnsMessage {
        id,
        flags: MessageFlags {
            recursion_desired,
            ..Default::default()
        },
        question: Some(q.clone()),
        answers: Vec::new(),
        authorities: Vec::new(),
        additionals: Vec::new(),
    };
    if udp_payload_size > 512 {
        msg.additionals.push(ResourceRecord {
            name: DomainName::root(),
            rrtype: rrtype::OPT,
            rrclass: udp_payload_size,
            ttl: 0,
            rdata: RData::Raw(Vec::new()),
        });
    }
    encode_message(&msg)
}

/// Encodes a full message without compression.
pub fn encode_message(msg: &DnsMessage) -> Result<Vec<u8>, WireError> {
    encode_with(msg, None)
}

/// Encodes a full message, compressing every name against earlier
/// occurrences.
pub(crate) fn encode_message_compressed(msg: &DnsMessage) -> Result<Vec<u8>, WireError> {
    encode_with(msg, Some(HashMap::new()))
}

struct Encoder {
    buf: Vec<u8>,
    // canonical suffix -> packet offset, present only when compressing
    offsets: Option<HashMap<String, u16>>,
}

fn encode_with(
    msg: &DnsMessage,
    offsets: Option<HashMap<String, u16>>,
) -> Result<Vec<u8>, WireError> {
    let mut enc = Encoder {
        buf: Vec::with_capacity(512),
        offsets,
    };
    enc.u16(msg.id);
    enc.u16(msg.flags.to_u16());
    enc.u16(if msg.question.is_some() { 1 } else { 0 });
    enc.u16(msg.answers.len() as u16);
    enc.u16(msg.authorities.len() as u16);
    enc.u16(msg.additionals.len() as u16);
    if let Some(q) = &msg.question {
        enc.name(&q.name)?;
        enc.u16(q.rrtype);
        enc.u16(q.rrclass);
    }
    for rr in msg
        .answers
        .iter()
        .chain(&msg.authorities)
        .chain(&msg.additionals)
    {
        enc.record(rr)?;
    }
    Ok(enc.buf)
}

impl Encoder {
    fn u8(&mut self, v: u8) {
        self.buf.push(v);
    }

    fn u16(&mut self, v: u16) {
        self.buf.extend_from_slice(&v.to_be_bytes());
    }

    fn u32(&mut self, v: u32) {
        self.buf.extend_from_slice(&v.to_be_bytes());
    }

    fn name(&mut self, name: &DomainName) -> Result<(), WireError> {
        if name.encoded_len() > super::name::MAX_NAME_LEN {
            return Err(WireError::NameTooLong(name.encoded_len()));
        }
        let labels = name.labels();
        for (i, label) in labels.iter().enumerate() {
            if label.len() > super::name::MAX_LABEL_LEN {
                return Err(WireError::BadLabelLength(label.len()));
            }
            if let Some(map) = &self.offsets {
                let suffix = name.suffix(labels.len() - i).canonical();
                if let Some(&off) = map.get(&suffix) {
                    self.u16(0xc000 | off);
                    return Ok(());
                }
            }
            if let Some(map) = &mut self.offsets {
                let here = self.buf.len();
                if here < 0x4000 {
                    let suffix = name.suffix(labels.len() - i).canonical();
                    map.insert(suffix, here as u16);
                }
            }
            self.u8(label.len() as u8);
            self.buf.extend_from_slice(label);
        }
        self.u8(0);
        Ok(())
    }

    fn record(&mut self, rr: &ResourceRecord) -> Result<(), WireError> {
        self.name(&rr.name)?;
        self.u16(rr.rrtype);
        self.u16(rr.rrclass);
        self.u32(rr.ttl);
        let len_pos = self.buf.len();
        self.u16(0); // rdlength placeholder
        self.rdata(&rr.rdata)?;
        let rdlen = self.buf.len() - len_pos - 2;
        self.buf[len_pos..len_pos + 2].copy_from_slice(&(rdlen as u16).to_be_bytes());
        Ok(())
    }

    fn rdata(&mut self, rdata: &RData) -> Result<(), WireError> {
        match rdata {
            RData::A(ip) => self.buf.extend_from_slice(&ip.octets()),
            RData::Aaaa(ip) => self.buf.extend_from_slice(&ip.octets()),
            RData::Ns(n) | RData::Cname(n) | RData::Ptr(n) => self.name(n)?,
            RData::Txt(strings) => {
                for s in strings {
                    let chunk = &s[..s.len().min(255)];
                    self.u8(chunk.len() as u8);
                    self.buf.extend_from_slice(chunk);
                }
            }
            RData::Mx {
                preference,
                exchange,
            } => {
                self.u16(*preference);
                self.name(exchange)?;
            }
            RData::Soa {
                mname,
                rname,
                serial,
                refresh,
                retry,
                expire,
                minimum,
            } => {
                self.name(mname)?;
                self.name(rname)?;
                self.u32(*serial);
                self.u32(*refresh);
                self.u32(*retry);
                self.u32(*expire);
                self.u32(*minimum);
            }
            RData::Caa { flag, tag, value } => {
                self.u8(*flag);
                let tag_bytes = tag.as_bytes();
                self.u8(tag_bytes.len().min(255) as u8);
                self.buf
                    .extend_from_slice(&tag_bytes[..tag_bytes.len().min(255)]);
                self.buf.extend_from_slice(value.as_bytes());
            }
            RData::Raw(bytes) => self.buf.extend_from_slice(bytes),
        }
        Ok(())
    }
}
