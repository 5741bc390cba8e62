import tensorflow as tf

loss = tf.constant(0.5)
writer = tf.summary.FileWriter("/tmp/logs")
sess = tf.Session()
for step in range(100):
    tf.summary.scalar("loss", loss)  # expect: RNC001
    merged = tf.summary.merge_all()  # expect: RNC001
    writer.add_summary(sess.run(merged), step)
