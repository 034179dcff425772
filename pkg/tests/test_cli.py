import io

import pytest

from helpers import complete, cycle, path
from rainbowindex import edge_list_text, read_edge_list
from rainbowindex.cli import main


def run_cli(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_graph(tmp_path, G, name="g.txt"):
    p = tmp_path / name
    p.write_text(edge_list_text(G), newline="\n")
    return str(p)


def test_gen_gnp_complete(tmp_path, capsys):
    out = tmp_path / "k5.txt"
    code, _, _ = run_cli(["gen", "--model", "gnp", "--n", "5", "--p", "1",
                          "--out", str(out)], capsys)
    assert code == 0
    text = out.read_text()
    assert text.startswith("5 10\n")
    assert text == edge_list_text(complete(5))


def test_gen_gnm_edge_count(tmp_path, capsys):
    out = tmp_path / "g.txt"
    code, _, _ = run_cli(["gen", "--model", "gnm", "--n", "6", "--M", "5",
                          "--out", str(out)], capsys)
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "6 5"
    assert len(lines) == 6


def test_gen_deterministic(tmp_path, capsys):
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    for out in (a, b):
        code, _, _ = run_cli(["gen", "--model", "gnp", "--n", "30", "--p",
                              "0.4", "--seed", "17", "--out", str(out)], capsys)
        assert code == 0
    assert a.read_bytes() == b.read_bytes()


def test_gen_round_trip(tmp_path, capsys):
    out = tmp_path / "g.txt"
    run_cli(["gen", "--model", "gnp", "--n", "25", "--p", "0.35", "--seed",
             "3", "--out", str(out)], capsys)
    with open(out) as f:
        G = read_edge_list(f)
    assert edge_list_text(G) == out.read_text()


def test_gen_bad_params(capsys):
    code, _, err = run_cli(["gen", "--model", "gnp", "--n", "5", "--p", "2"],
                           capsys)
    assert code == 2 and "error" in err
    code, _, _ = run_cli(["gen", "--model", "gnp", "--n", "5", "--M", "3"],
                         capsys)
    assert code == 2
    code, _, _ = run_cli(["gen", "--model", "gnm", "--n", "4", "--M", "99"],
                         capsys)
    assert code == 2


def test_color_command(tmp_path, capsys):
    g = write_graph(tmp_path, complete(4))
    out = tmp_path / "c.txt"
    code, _, _ = run_cli(["color", g, "--t", "3", "--seed", "5",
                          "--out", str(out)], capsys)
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "3"
    assert len(lines) == 7


def test_certify_cycle_lower(tmp_path, capsys):
    g = write_graph(tmp_path, cycle(6))
    out = tmp_path / "cert.txt"
    code, _, err = run_cli(["certify", g, "--k", "3", "--out", str(out)],
                           capsys)
    assert code == 0
    assert "rx >= 4" in err
    assert out.read_text() == "LOWER 3 S=0,2,4\n"


def test_certify_complete_upper(tmp_path, capsys):
    # star-certificate territory: at K60 a random 3-coloring passes the star
    # condition with probability ~0.98, so 20 attempts all but surely land
    g = write_graph(tmp_path, complete(60))
    out = tmp_path / "cert.txt"
    code, _, err = run_cli(["certify", g, "--k", "3", "--ell", "1",
                            "--attempts", "20", "--seed", "1",
                            "--out", str(out)], capsys)
    assert code == 0
    assert "rx <= 3" in err
    assert out.read_text().startswith("UPPER 3 t=3\n3\n")


def test_certify_path_star_mode_undecided(tmp_path, capsys):
    g = write_graph(tmp_path, path(3))
    code, _, err = run_cli(["certify", g, "--k", "3", "--mode", "star",
                            "--attempts", "10"], capsys)
    assert code == 1
    assert "undecided" in err


def test_certify_path_full_mode_decides(tmp_path, capsys):
    # the 2-edge path is rainbow under most 3-colorings, so full mode
    # certifies rx <= 3 where star mode cannot (no common neighbors exist)
    g = write_graph(tmp_path, path(3))
    code, _, err = run_cli(["certify", g, "--k", "3", "--mode", "full",
                            "--attempts", "30", "--seed", "0"], capsys)
    assert code == 0
    assert "rx <= 3" in err


def test_rx_triangle(tmp_path, capsys):
    g = write_graph(tmp_path, complete(3))
    out = tmp_path / "wit.txt"
    code, stdout, _ = run_cli(["rx", g, "--k", "3", "--out", str(out)], capsys)
    assert code == 0
    assert stdout.strip() == "rx = 2"
    assert out.read_text().startswith("2\n")


def test_rx_star_leaves(tmp_path, capsys):
    from helpers import star
    g = write_graph(tmp_path, star(3))
    code, stdout, _ = run_cli(["rx", g, "--k", "3"], capsys)
    assert code == 0
    assert "rx = 3" in stdout


def test_rx_disconnected_undefined(tmp_path, capsys):
    from rainbowindex import Graph
    g = write_graph(tmp_path, Graph.from_edges(5, [(0, 1), (2, 3)]))
    code, stdout, _ = run_cli(["rx", g, "--k", "3"], capsys)
    assert code == 1
    assert "rx undefined" in stdout


def test_rx_tmax_exhausted(tmp_path, capsys):
    g = write_graph(tmp_path, cycle(6))
    code, stdout, _ = run_cli(["rx", g, "--k", "3", "--tmax", "3"], capsys)
    assert code == 1
    assert "rx > 3" in stdout


def test_sweep_csv_output(tmp_path, capsys):
    out = tmp_path / "sweep.csv"
    code, _, _ = run_cli(["sweep", "--n", "10", "--k", "3", "--grid",
                          "0.3,0.8", "--trials", "10", "--seed", "5",
                          "--out", str(out)], capsys)
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("model,n,k,ell,grid,coef,trials")
    assert len(lines) == 3
    assert lines[1].startswith("gnp,10,3,1,0.300000,,10,")


def test_sweep_threads_identical(tmp_path, capsys):
    outs = []
    for threads, name in ((1, "a.csv"), (3, "b.csv")):
        out = tmp_path / name
        code, _, _ = run_cli(["sweep", "--n", "12", "--k", "3", "--grid",
                              "0.4,0.7", "--trials", "12", "--seed", "9",
                              "--threads", str(threads), "--out", str(out)],
                             capsys)
        assert code == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_sweep_gnm_mode(tmp_path, capsys):
    out = tmp_path / "sweep.csv"
    code, _, _ = run_cli(["sweep", "--model", "gnm", "--n", "8", "--k", "3",
                          "--grid", "5,25", "--trials", "8", "--seed", "4",
                          "--out", str(out)], capsys)
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[1].startswith("gnm,8,3,1,5.000000,")
    assert lines[2].startswith("gnm,8,3,1,25.000000,")


def test_color_output_reads_back_against_graph(tmp_path, capsys):
    from rainbowindex import read_coloring
    g = write_graph(tmp_path, cycle(6))
    out = tmp_path / "c.txt"
    code, _, _ = run_cli(["color", g, "--t", "4", "--seed", "8",
                          "--out", str(out)], capsys)
    assert code == 0
    with open(g) as f:
        G = read_edge_list(f)
    with open(out) as f:
        c = read_coloring(f, G)
    assert c.covers(G) and c.t == 4


def test_sweep_requires_one_grid(capsys):
    code, _, _ = run_cli(["sweep", "--n", "10", "--k", "3", "--trials", "5"],
                         capsys)
    assert code == 2
    code, _, _ = run_cli(["sweep", "--n", "10", "--k", "3", "--grid", "0.5",
                          "--coef-grid", "1.0"], capsys)
    assert code == 2


def test_sweep_coef_grid(tmp_path, capsys):
    out = tmp_path / "sweep.csv"
    code, _, _ = run_cli(["sweep", "--n", "20", "--k", "3", "--coef-grid",
                          "0.3,9", "--trials", "5", "--seed", "2",
                          "--out", str(out)], capsys)
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[1].endswith(",0")
    assert lines[2].endswith(",1")  # clamped at p=1
    assert lines[2].split(",")[4] == "1.000000"


def test_bounds_text(capsys):
    code, stdout, _ = run_cli(["bounds", "--k", "3"], capsys)
    assert code == 0
    assert "log_base = 1.285714" in stdout
    assert "rainbow_star_prob = 0.222222" in stdout


def test_bounds_with_n(capsys):
    code, stdout, _ = run_cli(["bounds", "--k", "3", "--n", "1000"], capsys)
    assert code == 0
    assert "threshold_p_a = 0.301791" in stdout


def test_bounds_p_to_m(capsys):
    code, stdout, _ = run_cli(["bounds", "--k", "3", "--n", "10", "--p", "0.5",
                               "--x", "0"], capsys)
    assert code == 0
    assert "M_from_p = 22" in stdout


def test_bounds_csv_format(capsys):
    code, stdout, _ = run_cli(["bounds", "--k", "4", "--format", "csv"], capsys)
    assert code == 0
    lines = stdout.splitlines()
    assert lines[0] == "name,value"
    assert lines[1].startswith("log_base,")


def test_malformed_graph_file(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("3 1\nx y\n")
    code, _, err = run_cli(["certify", str(p), "--k", "3"], capsys)
    assert code == 2
    assert "line 2" in err


def test_config_file(tmp_path, capsys):
    cfgfile = tmp_path / "flags.cfg"
    cfgfile.write_text("n = 5\np = 1\nmodel = gnp\n")
    out = tmp_path / "g.txt"
    code, _, _ = run_cli(["gen", "--config", str(cfgfile), "--out", str(out)],
                         capsys)
    assert code == 0
    assert out.read_text().startswith("5 10\n")
    # explicit flags beat the config file
    code, _, _ = run_cli(["gen", "--config", str(cfgfile), "--n", "4",
                          "--out", str(out)], capsys)
    assert code == 0
    assert out.read_text().startswith("4 6\n")


def test_usage_error_exit_code(capsys):
    assert main(["frobnicate"]) == 2
    assert main(["gen", "--model", "gnp"]) == 2


def test_seed_scheme_reported(tmp_path, capsys):
    out = tmp_path / "g.txt"
    code, _, err = run_cli(["gen", "--model", "gnp", "--n", "4", "--p", "0.5",
                            "--seed", "77", "--out", str(out)], capsys)
    assert code == 0
    assert "seed=77" in err
