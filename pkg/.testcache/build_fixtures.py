"""Sequentially build all cached test fixtures and report headline metrics."""
import sys
import time

sys.path.insert(0, "/root/pkg/tests")

import torch
from conftest import (ensure_reference_codec, ensure_reference_codec_64,
                      ensure_paired_run, ensure_high_fidelity_run,
                      ensure_alpha4_sweep)
from latentstego import codec as codec_mod
from latentstego import harness, message_codec, synthdata
from latentstego.core import RunConfig


def stamped(msg):
    print(f"[{time.strftime('%H:%M:%S')}] {msg}", flush=True)


def eval_run(run_dir, codec, images):
    enc, dec, meta, _ = message_codec.load_message_codec(run_dir / "ckpt_final.pt")
    rep = harness.evaluate_model(codec, enc, dec, images, 777, n_messages_per_image=2)
    cur = meta.get("curriculum", {})
    return rep, cur


def main():
    stamped("waiting for / building reference codec")
    codec_path = ensure_reference_codec(log=stamped)
    codec, cmeta, _ = codec_mod.load_codec(codec_path)
    stamped(f"codec ready: heldout {cmeta.get('heldout_psnr_db'):.2f} dB")

    images = synthdata.load_dataset("synth:128", (32, 32), 777)

    stamped("building paired run: +LSE arm")
    d_lse = ensure_paired_run(True, log=stamped)
    rep, cur = eval_run(d_lse, codec, images)
    stamped(f"+LSE  final: ema {cur.get('ema_bit_acc'):.4f} t1 {cur.get('iteration_tau1')} "
            f"t2 {cur.get('iteration_tau2')} msg {rep.message_accuracy_pct:.2f}% "
            f"bit {rep.mean_bit_acc:.4f} psnr {rep.mean_psnr_db:.2f}")
    lse_msg = rep.message_accuracy_pct

    stamped("building paired run: MSE-only arm")
    d_mse = ensure_paired_run(False, log=stamped)
    rep, cur = eval_run(d_mse, codec, images)
    stamped(f"MSE   final: ema {cur.get('ema_bit_acc'):.4f} t1 {cur.get('iteration_tau1')} "
            f"t2 {cur.get('iteration_tau2')} msg {rep.message_accuracy_pct:.2f}% "
            f"bit {rep.mean_bit_acc:.4f} psnr {rep.mean_psnr_db:.2f}")
    stamped(f"GAP = {lse_msg - rep.message_accuracy_pct:.2f} points")

    stamped("building high-fidelity run")
    d_hf = ensure_high_fidelity_run(log=stamped)
    rep, cur = eval_run(d_hf, codec, images)
    stamped(f"HIFI  final: ema {cur.get('ema_bit_acc'):.4f} msg {rep.message_accuracy_pct:.2f}% "
            f"bit {rep.mean_bit_acc:.4f} psnr {rep.mean_psnr_db:.2f} ssim {rep.mean_ssim:.4f}")

    stamped("building alpha4 sweep")
    d_sw = ensure_alpha4_sweep(log=stamped)
    stamped((d_sw / "sweep.csv").read_text().strip())

    stamped("all fixtures built")


if __name__ == "__main__":
    main()
