//! Message decoding. Total over arbitrary byte strings: every input yields
//! either a `DnsMessage` or a structured error, never a panic. Record data of
//! recognized types is parsed structurally; anything else (or any payload
//! that does not parse cleanly) is preserved as raw bytes.

use std::net::{Ipv4Addr, Ipv6Addr};

use super::name::{DomainName, MAX_NAME_LEN};
use super::rdata::RData;
use super::rrtype::rrtype;
use super::{DnsMessage, MessageFlags, Question, ResourceRecord, WireError};

/// Reads a possibly-compressed name starting at `offset`. Returns the name
/// and the offset of the first byte after the name *as it appears at
/// `offset`* (a compression pointer only advances past its own two bytes).
pub fn decode_name(packet: &[u8], offset: usize) -> Result<(DomainName, usize), WireError> {
    let mut pos = offset;
    let mut next: Option<usize> = None;
    let mut labels: Vec<Vec<u8>> = Vec::new();
    let mut visited: Vec<usize> = Vec::new();
    let mut decoded_len = 1usize;

    loop {
        let b = *packet.get(pos).ok_or(WireError::TruncatedPacket(pos))?;
        match b {
            0 => {
                if next.is_none() {
                    next = Some(pos + 1);
                }
                break;
            }
            b if b & 0xc0 == 0xc0 => {
                let low = *packet
                    .get(pos + 1)
                    .ok_or(WireError::TruncatedPacket(pos + 1))?;
                if next.is_none() {
                    next = Some(pos + 2);
                }
                let target = usize::from(b & 0x3f) << 8 | usize::from(low);
                if visited.contains(&target) {
                    return Err(WireError::PointerLoop(pos));
                }
                visited.push(target);
                if target >= packet.len() {
                    return Err(WireError::PointerOutOfBounds(pos));
                }
                pos = target;
            }
            b if b & 0xc0 != 0 => return Err(WireError::BadLabelType(pos)),
            len => {
                let len = usize::from(len);
                let end = pos + 1 + len;
                if end > packet.len() {
                    return Err(WireError::TruncatedPacket(pos));
                }
                decoded_len += len + 1;
                if decoded_len > MAX_NAME_LEN {
                    return Err(WireError::NameTooLong(decoded_len));
                }
                labels.push(packet[pos + 1..end].to_vec());
                pos = end;
            }
        }
    }
    let name = DomainName::from_labels(labels)?;
    Ok((name, next.expect("next offset set before loop exit")))
}

/// Decodes a full message. The packet must carry at least a 12-byte header;
/// section record counts must be backed by actual bytes.
pub fn decode_message(packet: &[u8]) -> Result<DnsMessage, WireError> {
    if packet.len() < 12 {
        return Err(WireError::TruncatedPacket(packet.len()));
    }
    let id = u16::from_be_bytes([packet[0], packet[1]]);
    let flags = MessageFlags::from_u16(u16::from_be_bytes([packet[2], packet[3]]));
    let qdcount = u16::from_be_bytes([packet[4], packet[5]]);
    let ancount = u16::from_be_bytes([packet[6], packet[7]]);
    let nscount = u16::from_be_bytes([packet[8], packet[9]]);
    let arcount = u16::from_be_bytes([packet[10], packet[11]]);

    let mut pos = 12usize;
    let mut question = None;
    for _ in 0..qdcount {
        let (name, after) = decode_name(packet, pos)?;
        pos = after;
        if pos + 4 > packet.len() {
            return Err(WireError::TruncatedPacket(pos));
        }
        let rrtype = u16::from_be_bytes([packet[pos], packet[pos + 1]]);
        let rrclass = u16::from_be_bytes([packet[pos + 2], packet[pos + 3]]);
        pos += 4;
        if question.is_none() {
            question = Some(Question {
                name,
                rrtype,
                rrclass,
            });
        }
    }

    let answers = decode_records(packet, &mut pos, ancount)?;
    let authorities = decode_records(packet, &mut pos, nscount)?;
    let additionals = decode_records(packet, &mut pos, arcount)?;

    Ok(DnsMessage {
        id,
        flags,
        question,
        answers,
        authorities,
        additionals,
    })
}

fn decode_records(
    packet: &[u8],
    pos: &mut usize,
    count: u16,
) -> Result<Vec<ResourceRecord>, WireError> {
    let mut records = Vec::with_capacity(usize::from(count).min(64));
    for _ in 0..count {
        let (name, after) = decode_name(packet, *pos)?;
        *pos = after;
        if *pos + 10 > packet.len() {
            return Err(WireError::TruncatedPacket(*pos));
        }
        let rrtype = u16::from_be_bytes([packet[*pos], packet[*pos + 1]]);
        let rrclass = u16::from_be_bytes([packet[*pos + 2], packet[*pos + 3]]);
        let ttl = u32::from_be_bytes([
            packet[*pos + 4],
            packet[*pos + 5],
            packet[*pos + 6],
            packet[*pos + 7],
        ]);
        let rdlen = usize::from(u16::from_be_bytes([packet[*pos + 8], packet[*pos + 9]]));
        *pos += 10;
        let rdata_start = *pos;
        let rdata_end = rdata_start + rdlen;
        if rdata_end > packet.len() {
            return Err(WireError::TruncatedPacket(rdata_start));
        }
        let rdata = decode_rdata(packet, rdata_start, rdata_end, rrtype);
        *pos = rdata_end;
        records.push(ResourceRecord {
            name,
            rrtype,
            rrclass,
            ttl,
            rdata,
        });
    }
    Ok(records)
}

/// Parses typed record data within `[start, end)`. Compression pointers may
/// reference anywhere in the packet. Payloads that do not parse cleanly (or
/// unrecognized types) come back as `RData::Raw`.
fn decode_rdata(packet: &[u8], start: usize, end: usize, rrtype: u16) -> RData {
    let raw = || RData::Raw(packet[start..end].to_vec());
    match rrtype {
        rrtype::A => {
            if end - start == 4 {
                RData::A(Ipv4Addr::new(
                    packet[start],
                    packet[start + 1],
                    packet[start + 2],
                    packet[start + 3],
                ))
            } else {
                raw()
            }
        }
        rrtype::AAAA => {
            if end - start == 16 {
                let mut octets = [0u8; 16];
                octets.copy_from_slice(&packet[start..end]);
                RData::Aaaa(Ipv6Addr::from(octets))
            } else {
                raw()
            }
        }
        rrtype::NS | rrtype::CNAME | rrtype::PTR => match decode_name(packet, start) {
            Ok((name, after)) if after == end => match rrtype {
                rrtype::NS => RData::Ns(name),
                rrtype::CNAME => RData::Cname(name),
                _ => RData::Ptr(name),
            },
            _ => raw(),
        },
        rrtype::TXT => {
            let mut strings = Vec::new();
            let mut p = start;
            while p < end {
                let len = usize::from(packet[p]);
                if p + 1 + len > end {
                    return raw();
                }
                strings.push(packet[p + 1..p + 1 + len].to_vec());
                p += 1 + len;
            }
            if strings.is_empty() {
                return raw();
            }
            RData::Txt(strings)
        }
        rrtype::MX => {
            if end - start < 3 {
                return raw();
            }
            let preference = u16::from_be_bytes([packet[start], packet[start + 1]]);
            match decode_name(packet, start + 2) {
                Ok((exchange, after)) if after == end => RData::Mx {
                    preference,
                    exchange,
                },
                _ => raw(),
            }
        }
        rrtype::SOA => {
            let parse = || -> Result<RData, WireError> {
                let (mname, p) = decode_name(packet, start)?;
                let (rname, p) = decode_name(packet, p)?;
                if p + 20 != end {
                    return Err(WireError::RdataOverrun(p));
                }
                let field = |i: usize| {
                    u32::from_be_bytes([
                        packet[p + i],
                        packet[p + i + 1],
                        packet[p + i + 2],
                        packet[p + i + 3],
                    ])
                };
                Ok(RData::Soa {
                    mname,
                    rname,
                    serial: field(0),
                    refresh: field(4),
                    retry: field(8),
                    expire: field(12),
                    minimum: field(16),
                })
            };
            parse().unwrap_or_else(|_| raw())
        }
        rrtype::CAA => {
            if end - start < 2 {
                return raw();
            }
            let flag = packet[start];
            let tag_len = usize::from(packet[start + 1]);
            if start + 2 + tag_len > end {
                return raw();
            }
            let tag = String::from_utf8_lossy(&packet[start + 2..start + 2 + tag_len]).into_owned();
            let value = String::from_utf8_lossy(&packet[start + 2 + tag_len..end]).into_owned();
            RData::Caa { flag, tag, value }
        }
        _ => raw(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_label_decodes_at_offset_zero() {
        let (name, next) = decode_name(&[0x00], 0).unwrap();
        assert!(name.is_root());
        assert_eq!(next, 1);
    }

    #[test]
    fn self_pointer_is_a_loop() {
        let err = decode_name(&[0xc0, 0x00], 0).unwrap_err();
        assert!(matches!(err, WireError::PointerLoop(_)));
    }

    #[test]
    fn two_step_pointer_loop_detected() {
        // name at 0 points to 2, which points back to 0
        let err = decode_name(&[0xc0, 0x02, 0xc0, 0x00], 0).unwrap_err();
        assert!(matches!(err, WireError::PointerLoop(_)));
    }

    #[test]
    fn pointer_past_packet_rejected() {
        let err = decode_name(&[0xc0, 0x40], 0).unwrap_err();
        assert!(matches!(err, WireError::PointerOutOfBounds(_)));
    }

    #[test]
    fn label_overrun_rejected() {
        // claims a 5-byte label with only 2 present
        let err = decode_name(&[0x05, b'a', b'b'], 0).unwrap_err();
        assert!(matches!(err, WireError::TruncatedPacket(_)));
    }

    #[test]
    fn reserved_label_bits_rejected() {
        let err = decode_name(&[0x40, 0x00], 0).unwrap_err();
        assert!(matches!(err, WireError::BadLabelType(_)));
    }

    #[test]
    fn short_header_is_an_error_not_a_panic() {
        assert!(decode_message(&[0u8; 11]).is_err());
        assert!(decode_message(&[]).is_err());
    }

    #[test]
    fn absurd_record_counts_fail_cleanly() {
        // Header claiming 65535 answers with no body.
        let mut packet = vec![0u8; 12];
        packet[6] = 0xff;
        packet[7] = 0xff;
        let err = decode_message(&packet).unwrap_err();
        assert!(matches!(err, WireError::TruncatedPacket(_)));
    }
}
