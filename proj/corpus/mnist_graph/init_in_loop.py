import tensorflow as tf

sess = tf.Session()
for epoch in range(10):
    sess.run(tf.global_variables_initializer())  # expect: RNC001
