import json
import signal
import socket
import subprocess
import sys
import time
import urllib.error
import urllib.request

import pytest

from quivermut import dumps_json, make

A3_JSON = dumps_json(make("A", 3))


def run_cli(*argv, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "quivermut", *argv],
        input=stdin,
        capture_output=True,
        text=True,
        timeout=180,
    )


def test_mutate_from_stdin():
    out = run_cli("mutate", "1", stdin=A3_JSON)
    assert out.returncode == 0
    assert json.loads(out.stdout) == {
        "n": 3,
        "b": [[0, -1, 1], [1, 0, -1], [-1, 1, 0]],
    }


def test_apply_seq_round_trip():
    out = run_cli("apply-seq", "1,1", stdin=A3_JSON)
    assert out.returncode == 0
    assert json.loads(out.stdout) == json.loads(A3_JSON)


def test_mutate_reads_file_and_writes_edges(tmp_path):
    f = tmp_path / "q.json"
    f.write_text(A3_JSON)
    out = run_cli("mutate", "0", "-i", str(f), "--format", "edges")
    assert out.returncode == 0
    assert json.loads(run_cli("canon", stdin=out.stdout).stdout) == json.loads(
        run_cli("canon", stdin=A3_JSON).stdout
    )


def test_class_summary_and_full():
    out = run_cli("class", "--summary", stdin=A3_JSON)
    data = json.loads(out.stdout)
    assert data["status"] == "finite"
    assert data["size"] == 4
    assert "representatives" not in data
    full = json.loads(run_cli("class", stdin=A3_JSON).stdout)
    assert len(full["representatives"]) == 4


def test_finite_reports_witness_for_infinite_input():
    bad = json.dumps({"n": 3, "b": [[0, 2, 1], [-2, 0, 1], [-1, -1, 0]]})
    data = json.loads(run_cli("finite", stdin=bad).stdout)
    assert data["finite"] is False
    assert isinstance(data["witness"], list)


def test_blockdecomp_answers():
    x6 = run_cli("catalog", "X6").stdout
    data = json.loads(run_cli("blockdecomp", stdin=x6).stdout)
    assert data == {"decomposable": False}
    a3 = json.loads(run_cli("blockdecomp", stdin=A3_JSON).stdout)
    assert a3["decomposable"] is True
    assert all(set(p) == {"kind", "vertices"} for p in a3["placements"])


def test_subquiver_command():
    out = run_cli("subquiver", "0,1", stdin=A3_JSON)
    assert json.loads(out.stdout)["b"] == [[0, 1], [-1, 0]]


def test_canon_hash_format():
    data = json.loads(run_cli("canon", stdin=A3_JSON).stdout)
    assert len(data["hash"]) == 16
    int(data["hash"], 16)
    assert sorted(data["witness"]) == [0, 1, 2]


def test_catalog_listing_and_lookup():
    listing = json.loads(run_cli("catalog").stdout)
    names = [e["name"] for e in listing["entries"]]
    assert "X6" in names and "A_pq" in names
    x6 = json.loads(run_cli("catalog", "X6").stdout)
    assert x6["n"] == 6
    assert x6["labels"]["hub"] == 3
    theta = json.loads(run_cli("catalog", "Theta", "3").stdout)
    assert theta["b"] == [[0, -3], [3, 0]]


def test_seeds_apply_and_count():
    a2 = dumps_json(make("A", 2))
    walked = json.loads(run_cli("seeds", "--apply", "0,1,0,1,0", stdin=a2).stdout)
    assert walked["cluster"] == ["x2", "x1"]
    counted = json.loads(run_cli("seeds", stdin=a2).stdout)
    assert counted == {"count": 5}


def test_error_exit_codes():
    bad_matrix = json.dumps({"n": 2, "b": [[0, 1], [1, 0]]})
    failed = run_cli("mutate", "0", stdin=bad_matrix)
    assert failed.returncode == 1
    assert failed.stderr.startswith("error:")
    usage = run_cli("mutate")
    assert usage.returncode == 2
    vertex = run_cli("mutate", "7", stdin=A3_JSON)
    assert vertex.returncode == 1


def test_verify_quick_passes():
    out = run_cli("verify", "--quick")
    assert out.returncode == 0, out.stdout + out.stderr
    lines = out.stdout.strip().splitlines()
    assert lines[-1] == "19/19 claims hold"
    assert all(line.startswith("PASS") for line in lines[:-1])


# ---------------------------------------------------------------------------
# serve


def free_port():
    with socket.socket() as s:
        s.bind(("127.0.0.1", 0))
        return s.getsockname()[1]


@pytest.fixture(scope="module")
def server():
    port = free_port()
    proc = subprocess.Popen(
        [sys.executable, "-m", "quivermut", "serve", "--port", str(port)],
        stdout=subprocess.PIPE,
        stderr=subprocess.STDOUT,
        text=True,
    )
    line = proc.stdout.readline()
    assert "listening" in line, line
    yield f"http://127.0.0.1:{port}"
    proc.send_signal(signal.SIGTERM)
    proc.wait(timeout=10)


def post(url, payload):
    req = urllib.request.Request(
        url,
        data=json.dumps(payload).encode(),
        headers={"Content-Type": "application/json"},
    )
    with urllib.request.urlopen(req, timeout=30) as resp:
        return json.loads(resp.read())


def test_serve_banner(server):
    with urllib.request.urlopen(server, timeout=30) as resp:
        banner = json.loads(resp.read())
    assert banner["service"] == "quivermut"
    assert "mutate" in banner["ops"]


def test_serve_mutate_and_canon(server):
    q = json.loads(A3_JSON)
    reply = post(server, {"id": 1, "op": "mutate", "quiver": q, "k": 1})
    assert reply["ok"] and reply["id"] == 1
    assert reply["result"]["b"] == [[0, -1, 1], [1, 0, -1], [-1, 1, 0]]
    canon = post(server, {"id": 2, "op": "canon", "quiver": q})
    assert len(canon["result"]["hash"]) == 16


def test_serve_finite_and_class(server):
    q = json.loads(A3_JSON)
    fin = post(server, {"id": 3, "op": "finite", "quiver": q})
    assert fin["result"]["finite"] is True
    cls = post(server, {"id": 4, "op": "class", "quiver": q})
    assert cls["result"]["size"] == 4


def test_serve_catalog_and_blockdecomp(server):
    cat = post(server, {"id": 5, "op": "catalog", "name": "X6"})
    assert cat["result"]["n"] == 6
    dec = post(server, {"id": 6, "op": "blockdecomp", "quiver": cat["result"]})
    assert dec["result"] == {"decomposable": False}


def test_serve_apply_seq(server):
    q = json.loads(A3_JSON)
    reply = post(server, {"id": 7, "op": "apply_seq", "quiver": q, "seq": [1, 1]})
    assert reply["result"]["b"] == json.loads(A3_JSON)["b"]


def test_serve_op_errors_are_replies_not_http_errors(server):
    bad_op = post(server, {"id": 8, "op": "zap"})
    assert bad_op["ok"] is False and "error" in bad_op
    bad_quiver = post(
        server,
        {"id": 9, "op": "mutate", "quiver": {"n": 2, "b": [[0, 1], [1, 0]]}, "k": 0},
    )
    assert bad_quiver["ok"] is False


def test_serve_rejects_malformed_body(server):
    req = urllib.request.Request(server, data=b"{not json", method="POST")
    with pytest.raises(urllib.error.HTTPError) as err:
        urllib.request.urlopen(req, timeout=30)
    assert err.value.code == 400
